#pragma once

#include "toricmorse/numeric.hpp"

#include <vector>

namespace toricmorse {

/// One linear condition coeffs . x >= rhs (strict when `strict` is set).
struct LinearConstraint {
    RatVector coeffs;
    Rat rhs;
    bool strict = false;
};

/// Exact Fourier-Motzkin feasibility over the rationals, with strict
/// inequalities tracked through eliminations (a combination is strict when
/// either parent is). Intended for the small systems that arise from fans;
/// no attempt is made to control the quadratic row growth beyond dropping
/// duplicates.
bool systemFeasible(std::vector<LinearConstraint> constraints, int numVars);

}  // namespace toricmorse
