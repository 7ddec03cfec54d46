#pragma once

#include "toricmorse/numeric.hpp"

#include <numeric>
#include <optional>

namespace toricmorse {

/*
 * Exact dense linear algebra on Eigen matrices.
 *
 * Integer routines use fraction-free (Bareiss) elimination: every division
 * performed is exact, so determinants and ranks over the integers (hence
 * over the rationals) come out with no rounding and no coefficient blowup
 * beyond the minors of the input. Rational routines use plain Gaussian
 * elimination, which is exact for Rat scalars.
 */

/// Determinant by fraction-free elimination. Works for any exact scalar
/// with exact division of minors (Int, Rat, int64 at small sizes).
template <typename Scalar>
Scalar determinantBareiss(MatrixX<Scalar> m) {
    const Index n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == Scalar(0)) {
            Index pivot = -1;
            for (Index i = k + 1; i < n; ++i)
                if (m(i, k) != Scalar(0)) { pivot = i; break; }
            if (pivot < 0) return Scalar(0);
            m.row(k).swap(m.row(pivot));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Scalar(-m(n - 1, n - 1));
}

/// Rank by fraction-free elimination with full pivoting.
template <typename Scalar>
Index rankBareiss(MatrixX<Scalar> m) {
    const Index rows = m.rows(), cols = m.cols();
    Scalar prev(1);
    Index r = 0;
    while (r < rows && r < cols) {
        Index pi = -1, pj = -1;
        for (Index i = r; i < rows && pi < 0; ++i)
            for (Index j = r; j < cols; ++j)
                if (m(i, j) != Scalar(0)) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != r) m.row(r).swap(m.row(pi));
        if (pj != r) m.col(r).swap(m.col(pj));
        for (Index i = r + 1; i < rows; ++i) {
            for (Index j = r + 1; j < cols; ++j)
                m(i, j) = (m(r, r) * m(i, j) - m(i, r) * m(r, j)) / prev;
            m(i, r) = Scalar(0);
        }
        prev = m(r, r);
        ++r;
    }
    return r;
}

/// Solves A x = b over the rationals (A square). Returns nullopt when A is
/// singular.
inline std::optional<RatVector> solveRational(RatMatrix a, RatVector b) {
    const Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solveRational: shape mismatch");
    for (Index k = 0; k < n; ++k) {
        Index pivot = -1;
        for (Index i = k; i < n; ++i)
            if (a(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            std::swap(b[k], b[pivot]);
        }
        for (Index i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    RatVector x(n);
    for (Index i = n - 1; i >= 0; --i) {
        Rat s = b[i];
        for (Index j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

/// Solves A x = b for integer inputs; nullopt when singular or when the
/// solution is not integral.
inline std::optional<IntVector> solveIntegral(const IntMatrix& a, const IntVector& b) {
    auto x = solveRational(toRational(a), toRational(b));
    if (!x) return std::nullopt;
    IntVector out(x->size());
    for (Index i = 0; i < x->size(); ++i) {
        if (!isIntegral((*x)[i])) return std::nullopt;
        out[i] = ratNumerator((*x)[i]);
    }
    return out;
}

inline Int contentGcd(const IntVector& v) {
    Int g = 0;
    for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v[i]);
    return g;
}

/// Kernel direction of an (n-1) x n integer matrix of full row rank,
/// via signed maximal minors (the generalized cross product). Returns
/// nullopt when the rows are dependent. For n = 1 the matrix has no rows
/// and the direction is e_0.
inline std::optional<IntVector> crossKernel(const IntMatrix& rows) {
    const Index n = rows.cols();
    if (rows.rows() != n - 1) throw std::invalid_argument("crossKernel: need n-1 rows");
    IntVector dir(n);
    if (n == 1) {
        dir[0] = 1;
        return dir;
    }
    bool nonzero = false;
    for (Index skip = 0; skip < n; ++skip) {
        IntMatrix minor(n - 1, n - 1);
        for (Index j = 0, c = 0; j < n; ++j) {
            if (j == skip) continue;
            minor.col(c++) = rows.col(j);
        }
        Int d = determinantBareiss<Int>(minor);
        dir[skip] = (skip % 2 == 0) ? d : -d;
        if (d != 0) nonzero = true;
    }
    if (!nonzero) return std::nullopt;
    return dir;
}

/// Unimodular matrix U with U v = e_0, for primitive v. Built from 2x2
/// Bezout row operations, so |det U| = 1 by construction.
inline IntMatrix unimodularCompletion(const IntVector& v) {
    const Index n = v.size();
    if (contentGcd(v) != 1) throw std::invalid_argument("unimodularCompletion: vector not primitive");
    IntMatrix u = IntMatrix::Identity(n, n);
    IntVector w = v;
    while (true) {
        Index i = -1;
        int nonzeros = 0;
        for (Index k = 0; k < n; ++k) {
            if (w[k] == 0) continue;
            ++nonzeros;
            if (i < 0 || boost::multiprecision::abs(w[k]) < boost::multiprecision::abs(w[i])) i = k;
        }
        if (nonzeros <= 1) {
            if (i != 0) {
                u.row(0).swap(u.row(i));
                std::swap(w[0], w[i]);
            }
            if (w[0] < 0) {
                u.row(0) = -u.row(0);
                w[0] = -w[0];
            }
            return u;
        }
        for (Index k = 0; k < n; ++k) {
            if (k == i || w[k] == 0) continue;
            Int q = w[k] / w[i];  // truncated quotient is fine: loop shrinks |w|
            w[k] -= q * w[i];
            u.row(k) -= (q * u.row(i).array()).matrix();
        }
    }
}

}  // namespace toricmorse
