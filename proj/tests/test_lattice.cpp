#include <deque>
#include <set>

#include <gtest/gtest.h>

#include "cpstrata/error.hpp"
#include "cpstrata/lattice.hpp"

using namespace cpstrata;
using namespace cpstrata::lattice;

namespace {

using Cls = std::vector<int>;  // (a, r_1..r_8) for a L - sum r_i E_i

int dot(const Cls& x, const Cls& y)
{
    int s = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i)
        s -= x[i] * y[i];
    return s;
}

// Orbit of E_1 under the reflections in the -2 classes E_i - E_j and L - E_i - E_j - E_k
// on 8 points. Restricting to classes supported on the first n points gives the
// exceptional classes of the n-point blowup.
const std::set<Cls>& orbit8()
{
    static const std::set<Cls> orbit = [] {
        std::vector<Cls> roots;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j) {
                Cls h(9, 0);
                h[static_cast<std::size_t>(i)] = -1;
                h[static_cast<std::size_t>(j)] = 1;
                roots.push_back(h);
                for (int k = j + 1; k <= 8; ++k) {
                    Cls c(9, 0);
                    c[0] = 1;
                    c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(k)] = 1;
                    roots.push_back(c);
                }
            }
        Cls e1(9, 0);
        e1[1] = -1;
        std::set<Cls> seen{e1};
        std::deque<Cls> todo{e1};
        while (!todo.empty()) {
            Cls x = todo.front();
            todo.pop_front();
            for (const auto& h : roots) {
                const int t = dot(x, h);
                if (t == 0)
                    continue;
                Cls y = x;
                for (std::size_t i = 0; i < 9; ++i)
                    y[i] += t * h[i];
                if (seen.insert(y).second)
                    todo.push_back(y);
            }
        }
        return seen;
    }();
    return orbit;
}

std::set<Cls> oracle(int n)
{
    std::set<Cls> out;
    for (const auto& c : orbit8()) {
        bool ok = true;
        for (int i = n + 1; i <= 8; ++i)
            ok = ok && c[static_cast<std::size_t>(i)] == 0;
        if (ok)
            out.insert(Cls(c.begin(), c.begin() + n + 1));
    }
    return out;
}

}  // namespace

TEST(Lattice, ExceptionalClassesMatchReflectionOrbit)
{
    EXPECT_EQ(orbit8().size(), 240u);
    for (int n = 1; n <= 8; ++n) {
        std::set<Cls> got;
        for (const auto& e : enumerate_exceptional(n)) {
            Cls c{e.degree()};
            for (int r : e.multiplicities())
                c.push_back(r);
            got.insert(c);
        }
        EXPECT_EQ(got, oracle(n)) << "n = " << n;
    }
}

TEST(Lattice, ExceptionalCounts)
{
    const std::vector<std::size_t> expected{1, 3, 6, 10, 16, 27, 56, 240};
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(enumerate_exceptional(n).size(), expected[static_cast<std::size_t>(n - 1)]);
}

TEST(Lattice, EveryExceptionalClassHasACurveShape)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_exceptional(n)) {
            EXPECT_TRUE(is_exceptional_numerical(e));
            EXPECT_TRUE(matches_curve_shape(e)) << to_string(e);
            EXPECT_EQ(intersection(e, e), -1);
            EXPECT_EQ(intersection(anticanonical(n), e), 1);
        }
}

TEST(Lattice, WallClasses)
{
    auto w3 = negative_wall_classes(3);
    ASSERT_EQ(w3.size(), 1u);
    EXPECT_EQ(to_string(w3[0]), "L - E1 - E2 - E3");
    std::set<std::string> w4;
    for (const auto& w : negative_wall_classes(4))
        w4.insert(to_string(w));
    EXPECT_EQ(w4, (std::set<std::string>{"L - E1 - E2 - E3", "L - E1 - E2 - E4", "L - E1 - E3 - E4",
                                         "L - E2 - E3 - E4", "L - E1 - E2 - E3 - E4"}));
    EXPECT_EQ(negative_wall_classes(5).size(), 16u);
    EXPECT_TRUE(negative_wall_classes(2).empty());
}

TEST(Lattice, AreaAndParsing)
{
    Capacities c({Rational(1, 2), Rational(2, 5), Rational(1, 5)});
    EXPECT_EQ(area(c, parse_h2("L - E1 - E2 - E3", 3)), Rational(-1, 10));
    EXPECT_EQ(parse_h2("2L - E1 - E2 - E3 - E4", 4), H2Element(2, {1, 1, 1, 1}));
    EXPECT_EQ(to_string(H2Element::exceptional_divisor(3, 2)), "E2");
    EXPECT_THROW(Capacities({Rational(0), Rational(1, 2)}), Error);
}

TEST(Lattice, WallsAreNotExceptionalAndClassesPadUp)
{
    for (int n = 1; n <= 8; ++n) {
        std::set<H2Element> ex;
        for (const auto& e : enumerate_exceptional(n))
            ex.insert(e);
        for (const auto& w : negative_wall_classes(n))
            EXPECT_FALSE(ex.count(w)) << to_string(w);
        if (n == 8)
            continue;
        std::set<H2Element> next;
        for (const auto& e : enumerate_exceptional(n + 1))
            next.insert(e);
        for (const auto& e : ex) {
            std::vector<int> r(e.multiplicities().begin(), e.multiplicities().end());
            r.push_back(0);
            EXPECT_TRUE(next.count(H2Element(e.degree(), r))) << to_string(e);
        }
    }
}
