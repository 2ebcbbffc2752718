#include "cpstrata/confgeom.hpp"

#include <sstream>

#include "cpstrata/error.hpp"

namespace cpstrata::confgeom {

ProjectivePoint::ProjectivePoint(Rational z0, Rational z1, Rational z2) : z_{std::move(z0), std::move(z1), std::move(z2)}
{
    for (auto& lead : z_) {
        if (sgn(lead) == 0)
            continue;
        const Rational inv = 1 / lead;
        for (auto& v : z_)
            v *= inv;
        return;
    }
    throw DomainError("a projective point needs a nonzero coordinate");
}

ProjectivePoint parse_point(const std::string& text)
{
    std::array<Rational, 3> z;
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ':')) {
        if (i == 3)
            throw ParseError("point '" + text + "' has more than three coordinates");
        z[static_cast<std::size_t>(i++)] = parse_rational(part);
    }
    if (i != 3)
        throw ParseError("point '" + text + "' needs three coordinates z0:z1:z2");
    return ProjectivePoint(z);
}

std::vector<ProjectivePoint> parse_points(const std::string& text)
{
    std::vector<ProjectivePoint> pts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        pts.push_back(parse_point(part));
    return pts;
}

std::string to_string(const ProjectivePoint& p)
{
    return "[" + cpstrata::to_string(p[0]) + ":" + cpstrata::to_string(p[1]) + ":" + cpstrata::to_string(p[2]) + "]";
}

Rational det3(const Matrix3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r)
{
    return sgn(det3({p.coords(), q.coords(), r.coords()})) == 0;
}

namespace {

void require_distinct(const std::vector<ProjectivePoint>& pts)
{
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw DomainError("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " coincide: " + to_string(pts[i]));
}

}  // namespace

Stratum stratum(const std::vector<ProjectivePoint>& points)
{
    if (points.size() != 3 && points.size() != 4)
        throw DomainError("strata are defined for 3 or 4 points, got " + std::to_string(points.size()));
    require_distinct(points);
    Stratum s;
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (collinear(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)],
                              points[static_cast<std::size_t>(k)]))
                    s.collinear_triples.push_back({i + 1, j + 1, k + 1});
    const auto count = s.collinear_triples.size();
    if (count == 0) {
        s.label = "F_0";
    } else if (count == 1) {
        const auto& t = s.collinear_triples.front();
        s.label = "F_" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
    } else if (count == 4) {
        s.label = "F_1234";
    } else {
        // two collinear triples share two points, so their lines agree
        throw Error("inconsistent collinearity: " + std::to_string(count) + " collinear triples");
    }
    return s;
}

std::string to_string(const ExtendedRatio& r)
{
    return r.value ? cpstrata::to_string(*r.value) : "inf";
}

ExtendedRatio cross_ratio(const std::vector<ProjectivePoint>& points)
{
    if (points.size() != 4)
        throw DomainError("cross ratio needs exactly four points");
    require_distinct(points);
    for (int k : {2, 3})
        if (!collinear(points[0], points[1], points[static_cast<std::size_t>(k)]))
            throw DomainError("points are not collinear");

    // write every point as s p1 + t p2 using a pair of coordinates where p1, p2 are independent
    const auto& a = points[0].coords();
    const auto& b = points[1].coords();
    int ci = -1, cj = -1;
    Rational minor;
    for (int i = 0; i < 3 && ci < 0; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Rational m = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
                         a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)];
            if (sgn(m) != 0) {
                ci = i;
                cj = j;
                minor = m;
                break;
            }
        }
    std::array<std::array<Rational, 2>, 4> st;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& x = points[k].coords();
        const auto I = static_cast<std::size_t>(ci), J = static_cast<std::size_t>(cj);
        st[k][0] = (x[I] * b[J] - x[J] * b[I]) / minor;
        st[k][1] = (a[I] * x[J] - a[J] * x[I]) / minor;
    }
    const auto D = [&](int p, int q) {
        const auto& u = st[static_cast<std::size_t>(p - 1)];
        const auto& v = st[static_cast<std::size_t>(q - 1)];
        return Rational(u[0] * v[1] - v[0] * u[1]);
    };
    const Rational num = D(3, 1) * D(4, 2);
    const Rational den = D(3, 2) * D(4, 1);
    if (sgn(den) == 0)
        return {};
    return {num / den};
}

ProjectivePoint apply_pgl(const Matrix3& m, const ProjectivePoint& p)
{
    if (sgn(det3(m)) == 0)
        throw DomainError("matrix is singular");
    std::array<Rational, 3> z;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            z[i] += m[i][j] * p.coords()[j];
    return ProjectivePoint(z);
}

}  // namespace cpstrata::confgeom
