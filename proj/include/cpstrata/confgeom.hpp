#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cpstrata/rational.hpp"

namespace cpstrata::confgeom {

/// Point of CP^2 over Q, stored with its first nonzero coordinate scaled to 1.
class ProjectivePoint {
public:
    ProjectivePoint(Rational z0, Rational z1, Rational z2);
    explicit ProjectivePoint(const std::array<Rational, 3>& z) : ProjectivePoint(z[0], z[1], z[2]) {}

    const std::array<Rational, 3>& coords() const { return z_; }
    const Rational& operator[](int i) const { return z_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    std::array<Rational, 3> z_;
};

ProjectivePoint parse_point(const std::string& text);                // "1:0:2/3"
std::vector<ProjectivePoint> parse_points(const std::string& text);  // comma separated
std::string to_string(const ProjectivePoint& p);                     // "[1:0:2/3]"

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Rational det3(const Matrix3& m);
bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);

struct Stratum {
    std::string label;                               // F_0, F_ijk or F_1234 (1-based)
    std::vector<std::array<int, 3>> collinear_triples;  // 1-based, ascending
};

/// 3 or 4 pairwise distinct points.
Stratum stratum(const std::vector<ProjectivePoint>& points);

/// Element of CP^1: a rational or infinity (nullopt).
struct ExtendedRatio {
    std::optional<Rational> value;

    bool is_infinite() const { return !value.has_value(); }
    friend bool operator==(const ExtendedRatio&, const ExtendedRatio&) = default;
};

std::string to_string(const ExtendedRatio& r);

/// (z3 - z1)(z4 - z2) / ((z3 - z2)(z4 - z1)) for four distinct collinear points.
ExtendedRatio cross_ratio(const std::vector<ProjectivePoint>& points);

ProjectivePoint apply_pgl(const Matrix3& m, const ProjectivePoint& p);

}  // namespace cpstrata::confgeom
