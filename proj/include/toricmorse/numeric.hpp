#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricmorse {

/// Arbitrary-precision integer and rational scalars (GMP-backed).
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Index = Eigen::Index;

/// Lattice coordinate scalar. All fan rays, divisor coefficients and
/// enumerated lattice points live at desk scale (see input limits below),
/// where 64-bit pairings are exact with >10^3 headroom. Everything that can
/// grow (determinants, ranks, interpolation, bounds) is done in Int/Rat.
using Coord = std::int64_t;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using CoordVector = VectorX<Coord>;
using CoordMatrix = MatrixX<Coord>;
using IntVector = VectorX<Int>;
using IntMatrix = MatrixX<Int>;
using RatVector = VectorX<Rat>;
using RatMatrix = MatrixX<Rat>;

/// Input limits that keep every Coord pairing exact in 64 bits.
inline constexpr Coord kMaxRayEntry = 1'000'000;
inline constexpr Coord kMaxDivisorCoeff = 1'000'000'000;

inline IntVector widen(const CoordVector& v) {
    return v.cast<Int>();
}

inline IntMatrix widen(const CoordMatrix& m) {
    return m.cast<Int>();
}

inline RatVector toRational(const IntVector& v) {
    RatVector out(v.size());
    for (Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline RatMatrix toRational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // always divides: r is C(n, i+1) * (i+1)! / ... exact at each step
    }
    return r;
}

inline Int intPow(const Int& base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline Rat ratPow(const Rat& base, int exp) {
    Rat r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline Int ratNumerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int ratDenominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool isIntegral(const Rat& q) { return ratDenominator(q) == 1; }

/// Exact Rat -> Int conversion; throws if q is not an integer.
inline Int toInt(const Rat& q) {
    if (!isIntegral(q))
        throw std::logic_error("expected integral rational, got " + q.str());
    return ratNumerator(q);
}

/// Errors raised when an internal exactness check fails. These signal a bug
/// in an upstream computation, never bad user input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace toricmorse
