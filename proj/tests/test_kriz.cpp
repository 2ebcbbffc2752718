#include <gtest/gtest.h>

#include "cpstrata/kriz.hpp"

using namespace cpstrata;
using namespace cpstrata::kriz;

namespace {

std::vector<int> ranks(int m, int k, int cap = -1)
{
    return dga::cohomology_ranks(kriz_model({m, k, cap})).rank_vector();
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

std::vector<int> projective_space(int m)
{
    std::vector<int> p(static_cast<std::size_t>(2 * m + 1), 0);
    for (int i = 0; i <= m; ++i)
        p[static_cast<std::size_t>(2 * i)] = 1;
    return p;
}

std::vector<int> padded(std::vector<int> v, std::size_t len)
{
    v.resize(len, 0);
    return v;
}

}  // namespace

TEST(Kriz, Names)
{
    EXPECT_EQ(x_name(3), "x3");
    EXPECT_EQ(g_name(2, 1), "G12");
    EXPECT_EQ(g_name(3, 11), "G3_11");
    auto t = kriz_table(2, 3);
    EXPECT_EQ(t->index_of("G21"), t->index_of("G12"));
    EXPECT_EQ(t->size(), 6);
}

TEST(Kriz, TwoPointsIsProjectiveSpaceTimesPuncturedSpace)
{
    // Conf_2(CP^m) fibres over CP^m with fibre CP^m minus a point ~ CP^{m-1}
    for (int m = 1; m <= 3; ++m) {
        auto got = ranks(m, 2);
        auto expected = padded(poly_mul(projective_space(m), projective_space(m - 1)), got.size());
        EXPECT_EQ(got, expected) << "m = " << m;
    }
}

TEST(Kriz, ProjectiveLine)
{
    // Conf_k(CP^1) ~ PGL_2 x M_{0,k}: (1 + t^3) prod_{j=2}^{k-2} (1 + j t)
    EXPECT_EQ(ranks(1, 3), padded({1, 0, 0, 1}, ranks(1, 3).size()));
    auto p = poly_mul({1, 0, 0, 1}, {1, 2});
    auto got = ranks(1, 4);
    EXPECT_EQ(got, padded(p, got.size()));
}

TEST(Kriz, EulerCharacteristicIsFallingFactorial)
{
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k) {
            long chi = 1;
            for (int i = 0; i < k; ++i)
                chi *= (m + 1 - i);
            auto rep = dga::cohomology_ranks(kriz_model({m, k, -1}));
            EXPECT_EQ(rep.euler_characteristic(), chi) << m << "," << k;
            EXPECT_TRUE(rep.top_degrees_vanish);
        }
}

TEST(Kriz, KnownTables)
{
    EXPECT_EQ(ranks(2, 1), (std::vector<int>{1, 0, 1, 0, 1, 0, 0}));
    EXPECT_EQ(ranks(2, 3, 9), (std::vector<int>{1, 0, 3, 0, 3, 0, 1, 1, 0, 1}));
    auto four = ranks(2, 4, 14);
    EXPECT_EQ(four, (std::vector<int>{1, 0, 4, 0, 4, 2, 0, 6, 0, 4, 2, 1, 2, 0, 0}));
}

TEST(Kriz, StructuralChecksForSmallParameters)
{
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 4; ++k) {
            auto d = kriz_model({m, k, -1});
            EXPECT_TRUE(dga::check_d_squared(d).ok) << m << "," << k;
            EXPECT_TRUE(dga::check_ideal_stability(d).ok) << m << "," << k;
        }
}

TEST(Kriz, DiagonalPullback)
{
    auto t = kriz_table(2, 2);
    EXPECT_EQ(diagonal_pullback(t, 2, 1, 2), gradedalg::parse_polynomial(t, "x1^2 + x1*x2 + x2^2"));
    EXPECT_EQ(top_degree({2, 3, -1}), 12);
}
