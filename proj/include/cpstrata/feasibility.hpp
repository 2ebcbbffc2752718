#pragma once

#include <optional>
#include <vector>

#include "cpstrata/rational.hpp"

namespace cpstrata::feasibility {

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal };

/// coefficients . x  <relation>  constant
struct LinearConstraint {
    std::vector<Rational> coefficients;
    Rational constant;
    Relation relation;
};

class LinearConstraintSystem {
public:
    explicit LinearConstraintSystem(int dimension);

    int dimension() const { return dimension_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }
    bool empty() const { return constraints_.empty(); }

    void add(std::vector<Rational> coefficients, Relation relation, Rational constant);
    void add(LinearConstraint c);

    bool satisfied_by(const std::vector<Rational>& x) const;

private:
    int dimension_;
    std::vector<LinearConstraint> constraints_;
};

bool feasible(const LinearConstraintSystem& sys);

/// A point satisfying every constraint, or nullopt when the system is infeasible.
/// The point maximizes the common slack of the strict constraints (capped at 1),
/// then gets snapped to the smallest common denominator that keeps it feasible.
std::optional<std::vector<Rational>> find_point(const LinearConstraintSystem& sys);

/// Exact LP: maximize c.y subject to A y <= b, y >= 0.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> y;
};

LpResult maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace cpstrata::feasibility
