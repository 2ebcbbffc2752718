#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "cpstrata/error.hpp"
#include "cpstrata/gradedalg.hpp"

using namespace cpstrata;
using namespace cpstrata::gradedalg;

namespace {

TablePtr mixed_table()
{
    return make_table({{"x", 2, 0}, {"y", 2, 3}, {"a", 1, 0}, {"b", 3, 0}, {"c", 5, 0}});
}

GPolynomial random_poly(const TablePtr& t, std::mt19937& gen, int max_terms = 4)
{
    GPolynomial p(t);
    const int terms = 1 + static_cast<int>(gen() % static_cast<unsigned>(max_terms));
    for (int i = 0; i < terms; ++i) {
        std::vector<int> word;
        const int len = static_cast<int>(gen() % 4);
        for (int k = 0; k < len; ++k)
            word.push_back(static_cast<int>(gen() % static_cast<unsigned>(t->size())));
        auto nf = normal_form(*t, word);
        if (!nf)
            continue;
        p.add_term(nf->monomial, Rational(nf->sign * (1 + static_cast<long>(gen() % 5))));
    }
    return p;
}

// sign of sorting a word of odd letters, counted by inversions
int inversion_sign(const std::vector<int>& w)
{
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            inv += w[i] > w[j];
    return inv % 2 ? -1 : 1;
}

}  // namespace

TEST(GradedAlg, KoszulSignsOnOddWords)
{
    auto t = make_table({{"a", 1, 0}, {"b", 3, 0}, {"c", 5, 0}, {"d", 1, 0}});
    std::vector<int> w{0, 1, 2, 3};
    do {
        auto nf = normal_form(*t, std::span<const int>(w));
        ASSERT_TRUE(nf);
        EXPECT_EQ(nf->sign, inversion_sign(w));
    } while (std::next_permutation(w.begin(), w.end()));
    EXPECT_FALSE(normal_form(*t, std::vector<std::string>{"a", "b", "a"}));
}

TEST(GradedAlg, NilpotenceAndEvenCommute)
{
    auto t = mixed_table();
    EXPECT_FALSE(normal_form(*t, std::vector<std::string>{"y", "y", "y"}));
    auto nf = normal_form(*t, std::vector<std::string>{"y", "x", "y"});
    ASSERT_TRUE(nf);
    EXPECT_EQ(nf->sign, 1);
    auto odd_even = normal_form(*t, std::vector<std::string>{"b", "x", "a"});
    ASSERT_TRUE(odd_even);
    EXPECT_EQ(odd_even->sign, -1);
}

TEST(GradedAlg, GradedCommutativityAndAssociativity)
{
    auto t = mixed_table();
    std::mt19937 gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_poly(t, gen), q = random_poly(t, gen), r = random_poly(t, gen);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        // homogeneous parts: pq = (-1)^{|p||q|} qp
        for (const auto& [mp, cp] : p.terms())
            for (const auto& [mq, cq] : q.terms()) {
                auto a = GPolynomial::monomial(t, mp, cp), b = GPolynomial::monomial(t, mq, cq);
                const int s = (degree(*t, mp) * degree(*t, mq)) % 2 ? -1 : 1;
                EXPECT_EQ(a * b, Rational(s) * (b * a));
            }
    }
}

TEST(GradedAlg, ParsePrintRoundTrip)
{
    auto t = mixed_table();
    std::mt19937 gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_poly(t, gen);
        p *= Rational(1, 1 + static_cast<long>(gen() % 4));
        EXPECT_EQ(parse_polynomial(t, to_string(p)), p) << to_string(p);
    }
    EXPECT_EQ(parse_polynomial(t, "(x + y)^2"), parse_polynomial(t, "x^2 + 2*x*y + y^2"));
    EXPECT_EQ(parse_polynomial(t, "b*a"), parse_polynomial(t, "-a*b"));
    EXPECT_EQ(to_string(parse_polynomial(t, "3/2*x - y")), "3/2*x - y");
    EXPECT_THROW(parse_polynomial(t, "z"), ParseError);
    EXPECT_THROW(parse_polynomial(t, "x +"), ParseError);
}

TEST(GradedAlg, MonomialBasisCounts)
{
    // free on x, y (degree 2): q = 2k has k + 1 monomials
    auto t = make_table({{"x", 2, 0}, {"y", 2, 0}, {"a", 3, 0}});
    for (int k = 0; k < 6; ++k)
        EXPECT_EQ(monomials_of_degree(*t, 2 * k).size(), static_cast<std::size_t>(k + 1));
    // odd degrees: a times degree q-3 monomials in x, y
    EXPECT_EQ(monomials_of_degree(*t, 7).size(), 3u);
    auto ms = monomials_of_degree(*t, 4);
    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
}

TEST(GradedAlg, FlagQuotientDimensions)
{
    auto t = make_table({{"T1", 2, 0}, {"T2", 2, 0}});
    PresentedAlgebra a(t, {parse_polynomial(t, "T1^2 + T2^2 + T1*T2"), parse_polynomial(t, "T1^3")});
    const std::vector<int> expected{1, 0, 2, 0, 2, 0, 1, 0, 0, 0, 0};
    for (int q = 0; q <= 10; ++q)
        EXPECT_EQ(quotient_dimension(a, q), expected[static_cast<std::size_t>(q)]) << q;
    EXPECT_TRUE(ideal_member(a, parse_polynomial(t, "T2^3")));
    EXPECT_FALSE(ideal_member(a, parse_polynomial(t, "T1*T2")));
    EXPECT_THROW(ideal_member(a, parse_polynomial(t, "T1 + T1^2")), DomainError);
}

TEST(GradedAlg, RelationOrderDoesNotMatter)
{
    auto t = make_table({{"u", 2, 0}, {"v", 2, 0}, {"w", 2, 0}, {"e", 3, 0}});
    std::vector<GPolynomial> rel{parse_polynomial(t, "u^2 - v*w"), parse_polynomial(t, "u*v + w^2"),
                                 parse_polynomial(t, "e*u - e*w"), parse_polynomial(t, "v^3")};
    PresentedAlgebra base(t, rel);
    std::mt19937 gen(9);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(rel.begin(), rel.end(), gen);
        PresentedAlgebra other(t, rel);
        for (int q = 0; q <= 10; ++q)
            EXPECT_EQ(quotient_dimension(base, q), quotient_dimension(other, q));
        auto p = parse_polynomial(t, "u^3 + v*w^2 + 5*u*v*w");
        EXPECT_EQ(base.reduce(p), other.reduce(p));
    }
}

TEST(GradedAlg, ReduceIsIdempotentAndKillsTheIdeal)
{
    auto t = make_table({{"x", 2, 0}, {"y", 2, 0}});
    PresentedAlgebra a(t, {parse_polynomial(t, "x^2 - 2*x*y")});
    auto p = parse_polynomial(t, "x^3 + y^3");
    auto r = a.reduce(p);
    EXPECT_EQ(a.reduce(r), r);
    EXPECT_TRUE(ideal_member(a, p - r));
    EXPECT_TRUE(a.reduce(parse_polynomial(t, "x^2*y - 2*x*y^2")).is_zero());
}

TEST(GradedAlg, InhomogeneousRelationRejected)
{
    auto t = make_table({{"x", 2, 0}});
    EXPECT_THROW(PresentedAlgebra(t, {parse_polynomial(t, "x + x^2")}), ModelError);
}

TEST(GradedAlg, Evaluate)
{
    auto s = make_table({{"a", 2, 0}, {"b", 2, 0}});
    auto t = make_table({{"x", 2, 0}});
    auto p = parse_polynomial(s, "a*b + b^2");
    auto img = evaluate(p, t, {parse_polynomial(t, "x"), parse_polynomial(t, "2*x")});
    EXPECT_EQ(img, parse_polynomial(t, "6*x^2"));
}
