#include "cpstrata/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace cpstrata::chambers {

namespace {

using feasibility::LinearConstraintSystem;
using feasibility::Relation;

bool relaxed_under(const H2Element& e, Boundary boundary)
{
    if (boundary != Boundary::Inclusive || e.degree() != 1)
        return false;
    int ones = 0;
    for (int r : e.multiplicities())
        ones += r == 1;
    return ones == 2;
}

// area(c, u) = a - sum r_i c_i, written as coefficient vector (-r) and constant a.
std::vector<Rational> area_coefficients(const H2Element& u)
{
    std::vector<Rational> coeffs;
    for (int r : u.multiplicities())
        coeffs.emplace_back(-r);
    return coeffs;
}

Rational volume(const std::vector<Rational>& c)
{
    Rational v(1);
    for (const auto& x : c)
        v -= x * x;
    return v;
}

// Rational s with |w| <= s <= |w|^2, assuming |w| >= 1.
Rational cut_level(const Rational& norm_sq)
{
    const Rational scale(1, 1 << 20);
    double approx = std::sqrt(norm_sq.get_d());
    Rational s(static_cast<long>(std::ceil(approx * (1 << 20))) + 1, 1 << 20);
    s.canonicalize();
    while (s * s < norm_sq)
        s += scale;
    return std::min<Rational>(s, norm_sq);
}

// Adds the strict volume condition 1 - |c|^2 > 0 by outer linear cuts
// (the unit ball lies in every half-space w.c < |w|).
std::optional<std::vector<Rational>> point_with_volume(LinearConstraintSystem sys)
{
    constexpr int kMaxCuts = 200;
    for (int iter = 0; iter < kMaxCuts; ++iter) {
        auto w = feasibility::find_point(sys);
        if (!w)
            return std::nullopt;
        if (sgn(volume(*w)) > 0)
            return w;
        Rational norm_sq = 1 - volume(*w);
        sys.add(*w, Relation::Less, cut_level(norm_sq));
    }
    throw Error("volume condition undecided after " + std::to_string(kMaxCuts) + " cuts");
}

}  // namespace

std::string to_string(Boundary b)
{
    return b == Boundary::Strict ? "strict" : "inclusive";
}

Boundary parse_boundary(const std::string& text)
{
    if (text == "strict")
        return Boundary::Strict;
    if (text == "inclusive")
        return Boundary::Inclusive;
    throw ParseError("boundary must be 'strict' or 'inclusive', got '" + text + "'");
}

std::string Admissibility::reason() const
{
    if (admissible)
        return "ok";
    if (violator)
        return lattice::to_string(*violator);
    return "volume";
}

AdmissibilityError::AdmissibilityError(Admissibility detail)
    : Error("capacities are not admissible (violated: " + detail.reason() + ")"), detail_(std::move(detail))
{
}

Admissibility is_admissible(const Capacities& c, Boundary boundary)
{
    Admissibility out;
    for (const auto& e : lattice::enumerate_exceptional(c.n())) {
        const int s = sgn(lattice::area(c, e));
        const bool ok = relaxed_under(e, boundary) ? s >= 0 : s > 0;
        if (!ok) {
            out.violator = e;
            return out;
        }
    }
    if (sgn(volume(c.values())) <= 0) {
        out.volume_violated = true;
        return out;
    }
    out.admissible = true;
    return out;
}

int ChamberSignature::true_count() const
{
    return static_cast<int>(std::count_if(wall_bits.begin(), wall_bits.end(), [](const auto& p) { return p.second; }));
}

std::string ChamberSignature::bit_string() const
{
    std::string s;
    for (const auto& [cls, bit] : wall_bits)
        s += bit ? '1' : '0';
    return s;
}

ChamberSignature chamber_signature(const Capacities& c, Boundary boundary)
{
    auto adm = is_admissible(c, boundary);
    if (!adm.admissible)
        throw AdmissibilityError(adm);
    ChamberSignature sig;
    for (auto& wall : lattice::negative_wall_classes(c.n())) {
        bool bit = sgn(lattice::area(c, wall)) > 0;
        sig.wall_bits.emplace_back(std::move(wall), bit);
    }
    return sig;
}

std::string chamber_label(const Capacities& c, Boundary boundary)
{
    auto sig = chamber_signature(c, boundary);
    switch (c.n()) {
    case 1:
    case 2:
        return "C_unique";
    case 3:
        return sig.true_count() == 0 ? "big" : "small";
    case 4:
        return "C_" + std::to_string(sig.true_count());
    default:
        throw UnsupportedError("chamber labels are defined for n <= 4 only (n=" + std::to_string(c.n()) +
                               "); use the signature");
    }
}

LinearConstraintSystem admissible_region(int n, Boundary boundary)
{
    LinearConstraintSystem sys(n);
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rational> a(static_cast<std::size_t>(n));
        a[static_cast<std::size_t>(i)] = 1;
        a[static_cast<std::size_t>(i + 1)] = -1;
        sys.add(std::move(a), Relation::GreaterEqual, 0);
    }
    {
        std::vector<Rational> a(static_cast<std::size_t>(n));
        a[static_cast<std::size_t>(n - 1)] = 1;
        sys.add(std::move(a), Relation::Greater, 0);
    }
    for (const auto& e : lattice::enumerate_exceptional(n)) {
        // area > 0  <=>  -sum r_i c_i > -a
        sys.add(area_coefficients(e), relaxed_under(e, boundary) ? Relation::GreaterEqual : Relation::Greater,
                Rational(-e.degree()));
    }
    return sys;
}

std::vector<Chamber> enumerate_chambers(int n, Boundary boundary)
{
    const auto walls = lattice::negative_wall_classes(n);
    std::vector<Chamber> out;
    std::vector<bool> bits;

    std::function<void(const LinearConstraintSystem&)> descend = [&](const LinearConstraintSystem& sys) {
        const std::size_t k = bits.size();
        if (k == walls.size()) {
            // Prefer a witness off every wall; fall back to the closed chamber.
            auto open = admissible_region(n, boundary);
            for (std::size_t i = 0; i < walls.size(); ++i)
                open.add(area_coefficients(walls[i]), bits[i] ? Relation::Greater : Relation::Less,
                         Rational(-walls[i].degree()));
            auto w = point_with_volume(open);
            if (!w)
                w = point_with_volume(sys);
            if (!w)
                return;
            Chamber ch;
            for (std::size_t i = 0; i < walls.size(); ++i)
                ch.signature.wall_bits.emplace_back(walls[i], bits[i]);
            ch.witness = std::move(*w);
            out.push_back(std::move(ch));
            return;
        }
        for (bool bit : {false, true}) {
            auto next = sys;
            next.add(area_coefficients(walls[k]), bit ? Relation::Greater : Relation::LessEqual,
                     Rational(-walls[k].degree()));
            if (!feasibility::feasible(next))
                continue;
            bits.push_back(bit);
            descend(next);
            bits.pop_back();
        }
    };
    descend(admissible_region(n, boundary));

    std::sort(out.begin(), out.end(),
              [](const Chamber& a, const Chamber& b) { return a.signature.bit_string() < b.signature.bit_string(); });
    return out;
}

}  // namespace cpstrata::chambers
