#include <random>

#include <gtest/gtest.h>

#include "cpstrata/confgeom.hpp"
#include "cpstrata/error.hpp"

using namespace cpstrata;
using namespace cpstrata::confgeom;

TEST(Confgeom, PointsCanonicalize)
{
    EXPECT_EQ(parse_point("2:4:6"), parse_point("1:2:3"));
    EXPECT_EQ(parse_point("0:-3:1"), parse_point("0:1:-1/3"));
    EXPECT_EQ(to_string(parse_point("0:2:1")), "[0:1:1/2]");
    EXPECT_THROW(parse_point("0:0:0"), DomainError);
    EXPECT_THROW(parse_point("1:2"), ParseError);
}

TEST(Confgeom, Collinearity)
{
    auto p = parse_points("1:0:0,0:1:0,1:1:0");
    EXPECT_TRUE(collinear(p[0], p[1], p[2]));
    auto q = parse_points("1:0:0,0:1:0,0:0:1");
    EXPECT_FALSE(collinear(q[0], q[1], q[2]));
    auto r = parse_points("1:1:1,1:2:3,1:3:5");
    EXPECT_TRUE(collinear(r[0], r[1], r[2]));
}

TEST(Confgeom, Strata)
{
    EXPECT_EQ(stratum(parse_points("1:0:0,0:1:0,0:0:1,1:1:1")).label, "F_0");
    EXPECT_EQ(stratum(parse_points("1:0:0,0:1:0,1:1:0,0:0:1")).label, "F_123");
    EXPECT_EQ(stratum(parse_points("0:0:1,1:0:0,0:1:0,1:1:0")).label, "F_234");
    EXPECT_EQ(stratum(parse_points("0:1:0,0:0:1,0:1:1,0:1:2")).label, "F_1234");
    EXPECT_EQ(stratum(parse_points("0:1:0,0:0:1,0:1:1,0:1:2")).collinear_triples.size(), 4u);
    EXPECT_THROW(stratum(parse_points("1:0:0,2:0:0,0:1:0")), DomainError);
    EXPECT_THROW(stratum(parse_points("1:0:0,0:1:0")), DomainError);
}

TEST(Confgeom, CrossRatio)
{
    EXPECT_EQ(to_string(cross_ratio(parse_points("1:0:0,1:1:0,1:2:0,1:3:0"))), "4/3");
    EXPECT_EQ(to_string(cross_ratio(parse_points("1:1:0,1:2:0,1:3:0,1:4:0"))), "4/3");
    // a point at infinity on the affine line: 0, 1, inf, 2 -> (inf-0)(2-1)/((inf-1)(2-0)) = 1/2
    EXPECT_EQ(to_string(cross_ratio(parse_points("1:0:0,1:1:0,0:1:0,1:2:0"))), "1/2");
    EXPECT_THROW(cross_ratio(parse_points("1:0:0,0:1:0,0:0:1,1:1:1")), DomainError);
    EXPECT_THROW(cross_ratio(parse_points("1:0:0,1:1:0,1:1:0,1:2:0")), DomainError);
}

TEST(Confgeom, CrossRatioSymmetries)
{
    // swapping the first pair inverts, swapping the middle points gives 1 - x
    auto p = parse_points("1:0:0,1:1:0,1:3:0,1:7:0");
    const Rational x = *cross_ratio(p).value;
    EXPECT_EQ(*cross_ratio({p[1], p[0], p[2], p[3]}).value, 1 / x);
    EXPECT_EQ(*cross_ratio({p[0], p[2], p[1], p[3]}).value, 1 - x);
}

TEST(Confgeom, PglAction)
{
    Matrix3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    auto p = parse_point("1:2:3");
    EXPECT_EQ(apply_pgl(id, p), p);
    Matrix3 diag{{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}};
    EXPECT_EQ(apply_pgl(diag, parse_point("1:1:1")), parse_point("1:1:2"));
    Matrix3 sing{{{1, 0, 0}, {1, 0, 0}, {0, 0, 1}}};
    EXPECT_THROW(apply_pgl(sing, p), DomainError);
}

TEST(Confgeom, PglInvariance)
{
    std::mt19937 gen(99);
    auto rnd = [&] {
        Rational r(static_cast<long>(gen() % 13) - 6, 1 + static_cast<long>(gen() % 4));
        r.canonicalize();
        return r;
    };
    int done = 0;
    while (done < 100) {
        Matrix3 m;
        for (auto& row : m)
            for (auto& v : row)
                v = rnd();
        if (det3(m) == 0)
            continue;
        // four points on the line through a, b, or four random points
        std::vector<ProjectivePoint> pts;
        try {
            if (gen() % 2) {
                ProjectivePoint a(rnd(), rnd(), rnd()), b(rnd(), rnd(), rnd());
                for (int i = 0; i < 4; ++i) {
                    const Rational s = rnd(), t = rnd();
                    pts.emplace_back(s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]);
                }
            } else {
                for (int i = 0; i < 4; ++i)
                    pts.emplace_back(rnd(), rnd(), rnd());
            }
            (void)stratum(pts);
        } catch (const DomainError&) {
            continue;  // zero vector or coincident points
        }
        std::vector<ProjectivePoint> img;
        for (const auto& x : pts)
            img.push_back(apply_pgl(m, x));
        auto s = stratum(pts);
        EXPECT_EQ(stratum(img).label, s.label);
        EXPECT_EQ(stratum(img).collinear_triples, s.collinear_triples);
        if (s.label == "F_1234") {
            auto x = cross_ratio(pts);
            EXPECT_EQ(cross_ratio(img), x);
            ASSERT_TRUE(x.value);
            EXPECT_NE(*x.value, 0);
            EXPECT_NE(*x.value, 1);
        }
        ++done;
    }
}

TEST(Confgeom, StratumFollowsRelabeling)
{
    auto p = parse_points("1:0:0,0:1:0,1:1:0,0:0:1");
    EXPECT_EQ(stratum({p[3], p[0], p[1], p[2]}).label, "F_234");
    EXPECT_EQ(stratum({p[0], p[3], p[1], p[2]}).label, "F_134");
}
