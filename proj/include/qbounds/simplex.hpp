#pragma once

#include "qbounds/rational.hpp"

#include <vector>

namespace qbounds {

enum class Relation { less_equal, equal, greater_equal };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::equal;
    Rational rhs;
};

/// maximize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational value;
};

/// Two-phase dense simplex in exact arithmetic with Bland's anti-cycling rule.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace qbounds
