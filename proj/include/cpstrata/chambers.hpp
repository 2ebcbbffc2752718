#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpstrata/error.hpp"
#include "cpstrata/feasibility.hpp"
#include "cpstrata/lattice.hpp"

namespace cpstrata::chambers {

using lattice::Capacities;
using lattice::H2Element;

/// Strict: every exceptional class pairs strictly positively.
/// Inclusive: the classes L - E_i - E_j may have area exactly 0 (c_i + c_j <= 1).
enum class Boundary { Strict, Inclusive };

std::string to_string(Boundary b);
Boundary parse_boundary(const std::string& text);

struct Admissibility {
    bool admissible = false;
    std::optional<H2Element> violator;  // first exceptional class with bad area
    bool volume_violated = false;

    std::string reason() const;  // "ok", "volume" or the violating class
};

class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(Admissibility detail);
    const Admissibility& detail() const { return detail_; }

private:
    Admissibility detail_;
};

Admissibility is_admissible(const Capacities& c, Boundary boundary = Boundary::Strict);

/// Bits keyed by negative_wall_classes(n), in that order; bit = (area > 0).
struct ChamberSignature {
    std::vector<std::pair<H2Element, bool>> wall_bits;

    int true_count() const;
    std::string bit_string() const;  // e.g. "11000"

    friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

ChamberSignature chamber_signature(const Capacities& c, Boundary boundary = Boundary::Strict);

/// "C_unique" (n=1,2), "big"/"small" (n=3), "C_r" (n=4).
std::string chamber_label(const Capacities& c, Boundary boundary = Boundary::Strict);

struct Chamber {
    ChamberSignature signature;
    std::vector<Rational> witness;
};

/// Every feasible signature with one rational witness, in canonical signature order.
std::vector<Chamber> enumerate_chambers(int n, Boundary boundary = Boundary::Strict);

/// Admissibility + ordering constraints (everything except the volume condition).
feasibility::LinearConstraintSystem admissible_region(int n, Boundary boundary);

}  // namespace cpstrata::chambers
