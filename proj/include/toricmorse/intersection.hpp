#pragma once

#include "toricmorse/cohomology.hpp"

#include <vector>

namespace toricmorse {

/// The Euler characteristic of sF + tG as an exact polynomial in (s, t) of
/// total degree <= n. Coefficient of s^i t^j sits at coeffs(i, j).
struct ChiPolynomial {
    int degree = 0;
    RatMatrix coeffs;

    Rat evaluate(const Int& s, const Int& t) const;
    /// Coefficient of s^{n-i} t^i for i = 0..n (the top homogeneous part).
    Rat topCoefficient(int i) const { return coeffs(degree - i, i); }
};

/// The n+1 numbers F^{n-i} . G^i for i = 0..n.
struct IntersectionTable {
    std::vector<Int> numbers;

    const Int& operator[](int i) const { return numbers[i]; }
    int degree() const { return static_cast<int>(numbers.size()) - 1; }
};

/*
 * Interpolates chi(X, sF + tG) on the triangular integer grid s, t >= 0,
 * s + t <= n (unisolvent for total degree <= n), then verifies the result
 * against direct Euler characteristics on the rest of the square grid
 * [0,n]^2 and at three off-grid points drawn from [n+1, n+3]^2. A mismatch
 * means an upstream support-region bug and raises InternalError.
 */
ChiPolynomial chiPolynomial(const ToricVariety& X, const Divisor& F, const Divisor& G,
                            const EngineOptions& options = {});

/// Extracts F^{n-i} . G^i from the top homogeneous part of chi(sF + tG):
/// that part equals sum_i C(n,i) s^{n-i} t^i F^{n-i}.G^i / n!.
IntersectionTable intersectionTable(const ToricVariety& X, const Divisor& F, const Divisor& G,
                                    const EngineOptions& options = {});

/// D^n for nef D, computed independently of the cohomology path: n! times
/// the leading coefficient of the lattice-point count of the dilated
/// section polytope, interpolated exactly from dilations 0..n.
Int degreeViaEhrhart(const ToricVariety& X, const Divisor& D);

}  // namespace toricmorse
