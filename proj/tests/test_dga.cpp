#include <random>

#include <gtest/gtest.h>

#include "cpstrata/ballmodels.hpp"
#include "cpstrata/dga.hpp"
#include "cpstrata/error.hpp"
#include "cpstrata/kriz.hpp"

using namespace cpstrata;
using namespace cpstrata::dga;
using gradedalg::make_table;
using gradedalg::parse_polynomial;

namespace {

DgaSpec free_dga(std::vector<gradedalg::Generator> gens, std::map<std::string, std::string> d, int cap)
{
    auto t = make_table(std::move(gens));
    std::map<std::string, GPolynomial> dd;
    for (const auto& [k, v] : d)
        dd.emplace(k, parse_polynomial(t, v));
    return DgaSpec(PresentedAlgebra(t, {}), dd, cap);
}

int dense_rank(std::vector<std::vector<Rational>> m)
{
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (int r = rank + 1; r < rows; ++r)
            if (m[r][c] != 0) {
                Rational f = m[r][c] / m[rank][c];
                for (int k = 0; k < cols; ++k)
                    m[r][k] -= f * m[rank][k];
            }
        ++rank;
    }
    return rank;
}

// Betti numbers of a DGA without relations straight from dense matrices of d on all monomials
std::vector<int> dense_ranks(const DgaSpec& d)
{
    const auto& t = *d.table();
    auto rank_of_d = [&](int q) {
        auto src = gradedalg::monomials_of_degree(t, q);
        auto dst = gradedalg::monomials_of_degree(t, q + 1);
        if (src.empty() || dst.empty())
            return 0;
        std::vector<std::vector<Rational>> m(dst.size(), std::vector<Rational>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto img = differential(d, GPolynomial::monomial(d.table(), src[j]));
            for (const auto& [mono, c] : img.terms()) {
                auto it = std::find(dst.begin(), dst.end(), mono);
                m[static_cast<std::size_t>(it - dst.begin())][j] = c;
            }
        }
        return dense_rank(m);
    };
    std::vector<int> out;
    for (int q = 0; q <= d.degree_cap(); ++q) {
        const int dim = static_cast<int>(gradedalg::monomials_of_degree(t, q).size());
        out.push_back(dim - rank_of_d(q) - (q > 0 ? rank_of_d(q - 1) : 0));
    }
    return out;
}

GPolynomial random_homogeneous(const TablePtr& t, int q, std::mt19937& gen)
{
    GPolynomial p(t);
    auto ms = gradedalg::monomials_of_degree(*t, q);
    for (const auto& m : ms)
        if (gen() % 2)
            p.add_term(m, Rational(static_cast<long>(gen() % 7) - 3));
    return p;
}

}  // namespace

TEST(Dga, ProjectiveSpaceModels)
{
    auto s2 = free_dga({{"x", 2, 0}, {"y", 3, 0}}, {{"y", "x^2"}}, 8);
    EXPECT_EQ(cohomology_ranks(s2).rank_vector(), (std::vector<int>{1, 0, 1, 0, 0, 0, 0, 0, 0}));
    auto cp2 = free_dga({{"x", 2, 0}, {"y", 5, 0}}, {{"y", "x^3"}}, 10);
    EXPECT_EQ(cohomology_ranks(cp2).rank_vector(), (std::vector<int>{1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0}));
    auto s3 = free_dga({{"z", 3, 0}}, {}, 6);
    EXPECT_EQ(cohomology_ranks(s3).rank_vector(), (std::vector<int>{1, 0, 0, 1, 0, 0, 0}));
}

TEST(Dga, RanksAgreeWithDenseComputation)
{
    std::vector<DgaSpec> models{
        ballmodels::iemb_model(3, "big", {}, 10),
        ballmodels::iemb_model(2, "C_unique", {}, 10),
        ballmodels::iemb_model(1, "C_unique", {}, 10),
        ballmodels::iemb_model(4, "C_0", {}, 12),
        free_dga({{"x", 2, 0}, {"y", 5, 0}}, {{"y", "x^3"}}, 10),
        free_dga({{"x", 2, 0}, {"y", 2, 0}, {"a", 3, 0}, {"b", 3, 0}}, {{"a", "x^2 - y^2"}, {"b", "x*y"}}, 10),
    };
    for (const auto& m : models)
        EXPECT_EQ(cohomology_ranks(m).rank_vector(), dense_ranks(m));
}

TEST(Dga, LeibnizOnRandomPairs)
{
    std::vector<DgaSpec> models{kriz::kriz_model({2, 3, -1}), ballmodels::iemb_model(4, "C_4", {}, 14)};
    std::mt19937 gen(2024);
    int checked = 0;
    for (const auto& d : models) {
        for (int trial = 0; trial < 50; ++trial) {
            const int p_deg = static_cast<int>(gen() % 7), q_deg = static_cast<int>(gen() % 7);
            auto p = random_homogeneous(d.table(), p_deg, gen);
            auto q = random_homogeneous(d.table(), q_deg, gen);
            const Rational sign = p_deg % 2 ? -1 : 1;
            auto lhs = differential(d, p * q);
            auto rhs = differential(d, p) * q + sign * (p * differential(d, q));
            EXPECT_TRUE(d.algebra().reduce(lhs - rhs).is_zero());
            ++checked;
        }
    }
    EXPECT_EQ(checked, 100);
}

TEST(Dga, StructuralChecksOnEveryBuiltModel)
{
    std::vector<std::pair<int, std::string>> rows{{1, "C_unique"}, {2, "C_unique"}, {3, "big"}, {3, "small"},
                                                  {4, "C_0"},      {4, "C_1"},      {4, "C_2"}, {4, "C_3"},
                                                  {4, "C_4"},      {4, "C_5"}};
    for (const auto& [n, ch] : rows) {
        auto d = ballmodels::iemb_model(n, ch);
        EXPECT_TRUE(check_d_squared(d).ok) << n << " " << ch;
        EXPECT_TRUE(check_ideal_stability(d).ok) << n << " " << ch;
    }
}

TEST(Dga, BadDifferentialsAreCaught)
{
    auto t = make_table({{"x", 2, 0}, {"a", 3, 0}, {"b", 4, 0}});
    // d(b) = a*x is not closed: d(a*x) = x^3 != 0
    std::map<std::string, GPolynomial> d{{"a", parse_polynomial(t, "x^2")}, {"b", parse_polynomial(t, "a*x")}};
    DgaSpec bad(PresentedAlgebra(t, {}), d, 8);
    EXPECT_FALSE(check_d_squared(bad).ok);
    EXPECT_THROW(cohomology_ranks(bad), ModelError);

    // the ideal (a*x) is not d-stable when d(a) = x: d(a*x) = x^2
    auto u = make_table({{"x", 2, 0}, {"a", 1, 0}});
    DgaSpec unstable(PresentedAlgebra(u, {parse_polynomial(u, "a*x")}), {{"a", parse_polynomial(u, "x")}}, 6);
    EXPECT_FALSE(check_ideal_stability(unstable).ok);

    EXPECT_THROW(DgaSpec(PresentedAlgebra(t, {}), {{"a", parse_polynomial(t, "x")}}, 4), ModelError);
}

TEST(Dga, CocyclesAndCoboundaries)
{
    auto d = ballmodels::iemb_model(3, "big", {}, 10);
    auto t = d.table();
    EXPECT_TRUE(is_cocycle(d, parse_polynomial(t, "T1")));
    EXPECT_FALSE(is_cocycle(d, parse_polynomial(t, "beta")));
    EXPECT_TRUE(is_coboundary(d, parse_polynomial(t, "T1^2 + T1*T2 + T2^2")));
    EXPECT_FALSE(is_coboundary(d, parse_polynomial(t, "T1^2")));
}

TEST(Dga, PresentationChecks)
{
    auto flag = ballmodels::iemb_model(3, "big", {}, 10);
    auto t = flag.table();
    auto p = make_table({{"T1", 2, 0}, {"T2", 2, 0}});
    std::map<std::string, GPolynomial> gm{{"T1", parse_polynomial(t, "T1")}, {"T2", parse_polynomial(t, "T2")}};

    PresentedAlgebra right(p, {parse_polynomial(p, "T1^2 + T2^2 + T1*T2"), parse_polynomial(p, "T1^3")});
    EXPECT_TRUE(verify_presentation(flag, right, gm).pass);

    // same graded dimensions, but T1^2 is not zero in the cohomology
    PresentedAlgebra wrong(p, {parse_polynomial(p, "T1^2"), parse_polynomial(p, "T2^3")});
    auto r = verify_presentation(flag, wrong, gm);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.failed_degree, 4);
    EXPECT_EQ(r.expected, r.computed);

    PresentedAlgebra too_small(p, {parse_polynomial(p, "T1^2"), parse_polynomial(p, "T2^2")});
    EXPECT_FALSE(verify_presentation(flag, too_small, gm).pass);
}

TEST(Dga, ReorderingKeepsRanks)
{
    auto d = ballmodels::iemb_model(4, "C_2", {}, 12);
    const int n = d.table()->size();
    std::vector<int> order;
    for (int i = n - 1; i >= 0; --i)
        order.push_back(i);
    EXPECT_EQ(cohomology_ranks(reorder_generators(d, order)).rank_vector(), cohomology_ranks(d).rank_vector());
}

TEST(Dga, RepresentativesAreCocycles)
{
    auto d = kriz::kriz_model({2, 3, -1});
    auto rep = cohomology_ranks(d);
    for (const auto& [q, reps] : rep.representatives) {
        EXPECT_EQ(static_cast<int>(reps.size()), rep.rank(q));
        for (const auto& r : reps) {
            EXPECT_TRUE(is_cocycle(d, r));
            EXPECT_FALSE(is_coboundary(d, r));
        }
    }
}
