#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpstrata/rational.hpp"

namespace cpstrata::lattice {

inline constexpr int kMaxPoints = 8;

/// A class a*L - r1*E1 - ... - rn*En in H_2 of the n-fold blow-up of CP^2.
///
/// Ordering is lexicographic on (a, r1, ..., rn), which is the canonical
/// order used by every enumeration in this namespace.
class H2Element {
public:
    H2Element(int degree, std::vector<int> multiplicities);

    static H2Element line(int n);
    static H2Element exceptional_divisor(int n, int i);  // E_i, 1-based

    int degree() const { return degree_; }
    int n() const { return static_cast<int>(mult_.size()); }
    std::span<const int> multiplicities() const { return mult_; }
    int multiplicity(int i) const { return mult_.at(static_cast<std::size_t>(i - 1)); }

    H2Element operator+(const H2Element& other) const;
    H2Element operator-(const H2Element& other) const;
    H2Element operator*(int s) const;

    friend bool operator==(const H2Element&, const H2Element&) = default;
    friend std::strong_ordering operator<=>(const H2Element&, const H2Element&) = default;

private:
    int degree_;
    std::vector<int> mult_;
};

/// Ball capacities, stored sorted nonincreasing; every entry is > 0.
class Capacities {
public:
    explicit Capacities(std::vector<Rational> values);

    int n() const { return static_cast<int>(values_.size()); }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Capacities&, const Capacities&) = default;

private:
    std::vector<Rational> values_;
};

int intersection(const H2Element& u, const H2Element& v);

H2Element anticanonical(int n);

bool is_exceptional_numerical(const H2Element& u);

/// All classes with a in [0,6], r_i in [-1,3] satisfying E.E = -1, K.E = 1.
std::vector<H2Element> enumerate_exceptional(int n);

/// Whether u has one of the shapes of the degree <= 6 curve list (or is some E_i).
bool matches_curve_shape(const H2Element& u);

/// Classes from the curve-shape list with self-intersection <= -2 and all r_i >= 0.
std::vector<H2Element> negative_wall_classes(int n);

/// <[omega_c], u> = a - sum c_i r_i.
Rational area(const Capacities& c, const H2Element& u);

std::string to_string(const H2Element& u);
H2Element parse_h2(std::string_view text, int n);

}  // namespace cpstrata::lattice
