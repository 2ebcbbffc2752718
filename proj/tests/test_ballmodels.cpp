#include <gtest/gtest.h>

#include "cpstrata/ballmodels.hpp"
#include "cpstrata/error.hpp"
#include "cpstrata/kriz.hpp"

using namespace cpstrata;
using namespace cpstrata::ballmodels;

namespace {

std::vector<int> ranks(const dga::DgaSpec& d)
{
    return dga::cohomology_ranks(d).rank_vector();
}

}  // namespace

TEST(CircleWeights, Invariants)
{
    CircleWeights w({{1, 1}, {2, -1}, {3, 5}});
    EXPECT_EQ(w.m(0), 3);
    EXPECT_EQ(w.n(0), 2);
    EXPECT_EQ(w.m(1), 3);
    EXPECT_EQ(w.n(1), -2);
    EXPECT_EQ(w.m(2), 49);
    EXPECT_EQ(w.n(2), 120);
    EXPECT_THROW(CircleWeights({{0, 0}}), DomainError);
    EXPECT_EQ(parse_weights("1,1;2,-1"), CircleWeights({{1, 1}, {2, -1}}));
    EXPECT_EQ(to_string(parse_weights("1,1;2,-1")), "1,1;2,-1");
    EXPECT_THROW(parse_weights("1;2"), ParseError);
}

TEST(CircleWeights, MStaysPositive)
{
    // a^2 + ab + b^2 > 0 away from (0,0)
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            if (a || b) {
                EXPECT_GT(CircleWeights({{a, b}}).m(0), 0);
            }
}

TEST(BallModels, ChamberNames)
{
    EXPECT_EQ(normalize_chamber(1, "unique"), "C_unique");
    EXPECT_EQ(normalize_chamber(4, "C3"), "C_3");
    EXPECT_EQ(normalize_chamber(3, "big"), "big");
    EXPECT_THROW(normalize_chamber(4, "big"), Error);
    EXPECT_THROW(iemb_model(5, "C_0"), UnsupportedError);
}

TEST(BallModels, SmallBallCounts)
{
    EXPECT_EQ(ranks(iemb_model(1, "C_unique", {}, 8)), (std::vector<int>{1, 0, 1, 0, 1, 0, 0, 0, 0}));
    EXPECT_EQ(ranks(iemb_model(2, "C_unique", {}, 8)), (std::vector<int>{1, 0, 2, 0, 2, 0, 1, 0, 0}));
    EXPECT_EQ(ranks(iemb_model(3, "big", {}, 8)), (std::vector<int>{1, 0, 2, 0, 2, 0, 1, 0, 0}));
}

TEST(BallModels, ThreeSmallBallsMatchConfigurationSpace)
{
    auto conf = ranks(kriz::kriz_model({2, 3, 12}));
    for (const char* w : {"1,0", "1,1", "2,-1", "3,5"})
        EXPECT_EQ(ranks(iemb_model(3, "small", parse_weights(w), 12)), conf) << w;
    EXPECT_EQ(ranks(iemb_model(3, "small", parse_weights("1,0;0,1;2,-1"), 12)), conf);
    EXPECT_THROW(iemb_model(3, "small", parse_weights("1,1;0,1;2,-1")), DomainError);
    EXPECT_THROW(iemb_model(3, "small", parse_weights("1,1;2,1")), DomainError);
}

TEST(BallModels, FourBallRows)
{
    for (int r = 1; r <= 4; ++r) {
        auto got = ranks(iemb_model(4, "C_" + std::to_string(r), {}, 14));
        std::vector<int> expected(15, 0);
        expected[0] = 1;
        expected[2] = r;
        expected[4] = r - 1;
        expected[5] = 1;
        expected[7] = r;
        expected[9] = r - 1;
        EXPECT_EQ(got, expected) << "C_" << r;
    }
    auto c0 = ranks(iemb_model(4, "C_0", {}, 14));
    EXPECT_EQ(c0, (std::vector<int>{1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(ranks(iemb_model(4, "C_5", {}, 14)), ranks(kriz::kriz_model({2, 4, 14})));
}

TEST(BallModels, PresentationsVerify)
{
    std::vector<std::tuple<int, std::string, std::string>> rows{
        {1, "C_unique", ""}, {2, "C_unique", ""}, {3, "big", ""},         {3, "small", "2,-1"},
        {4, "C_0", ""},      {4, "C_1", "3,5"},   {4, "C_2", "1,0;5,2"},  {4, "C_3", ""},
        {4, "C_4", "1,1;2,-1;3,5;1,2"}};
    for (const auto& [n, ch, w] : rows) {
        auto weights = parse_weights(w);
        auto model = iemb_model(n, ch, weights, 14);
        auto pres = iemb_presentation(n, ch, weights);
        auto rep = dga::verify_presentation(model, pres.algebra, pres.gen_map);
        EXPECT_TRUE(rep.pass) << n << " " << ch << ": " << rep.failure;
    }
    EXPECT_THROW(iemb_presentation(4, "C_5"), UnsupportedError);
    for (int r = 1; r <= 4; ++r) {
        auto pres = alpha_presentation(r);
        auto model = iemb_model(4, "C_" + std::to_string(r), unit_m_weights(r), 14);
        EXPECT_TRUE(dga::verify_presentation(model, pres.algebra, pres.gen_map).pass) << r;
    }
}

TEST(BallModels, WeightIndependence)
{
    for (int r = 1; r <= 4; ++r) {
        std::vector<CircleWeights> sets{
            CircleWeights(std::vector<std::pair<long, long>>(static_cast<std::size_t>(r), {1, 1})),
            CircleWeights(std::vector<std::pair<long, long>>(static_cast<std::size_t>(r), {2, -1})),
            unit_m_weights(r)};
        auto wi = weight_independence_check(4, "C_" + std::to_string(r), sets, 14);
        EXPECT_TRUE(wi.same) << r;
        EXPECT_EQ(wi.rank_tables.size(), 3u);
    }
}

TEST(BallModels, SigmaPullbacksOfTheTorus)
{
    auto t = gradedalg::make_table({{"T1", 2, 0}, {"T2", 2, 0}});
    auto [s2, s3] = sigma_pullbacks(t, {{{1, 0}, {0, 1}}});
    EXPECT_EQ(s2, gradedalg::parse_polynomial(t, "T1^2 + T1*T2 + T2^2"));
    EXPECT_EQ(s3, gradedalg::parse_polynomial(t, "T1^2*T2 + T1*T2^2"));
}

TEST(BallModels, StabilizerAlgebra)
{
    auto literal = small_balls_stabilizer_algebra(Transcription::Literal);
    auto full = small_balls_stabilizer_algebra(Transcription::SymmetricCompletion);
    const std::vector<int> low{1, 0, 4, 0};
    for (int q = 0; q < 4; ++q) {
        EXPECT_EQ(gradedalg::quotient_dimension(literal, q), low[static_cast<std::size_t>(q)]);
        EXPECT_EQ(gradedalg::quotient_dimension(full, q), low[static_cast<std::size_t>(q)]);
    }
    // the listed quadrics span only a 4-dimensional space of relations in degree 4
    EXPECT_EQ(gradedalg::graded_basis(literal, 4)->ideal_dimension(), 4);
    EXPECT_EQ(gradedalg::graded_basis(full, 4)->ideal_dimension(), 5);
    for (int q = 4; q <= 14; ++q)
        EXPECT_EQ(gradedalg::quotient_dimension(full, q), q % 2 ? 2 : 5) << q;
}

TEST(BallModels, AbIsomorphism)
{
    auto ab = ab_isomorphism_check(10);
    EXPECT_TRUE(ab.pass);
    EXPECT_EQ(ab.relations.size(), 7u);
    for (const auto& r : ab.relations)
        EXPECT_TRUE(r.ideal_member) << r.source;
    EXPECT_EQ(ab.source_dims, ab.target_dims);
    EXPECT_TRUE(ab.onto);
}
