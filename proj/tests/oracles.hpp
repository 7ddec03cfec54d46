#pragma once

#include "toricmorse/numeric.hpp"

#include <cstdint>
#include <vector>

/*
 * Closed-form cohomology of line bundles on projective spaces and their
 * products, independent of the lattice-point engine. Used to freeze expected
 * values in tests.
 */
namespace oracle {

using toricmorse::Int;

inline Int binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// (h^0, ..., h^n) of O(d) on P^n: h^0 = C(d+n, n), h^n = C(-d-1, n),
/// everything in between zero.
inline std::vector<Int> projectiveSpace(int n, std::int64_t d) {
    std::vector<Int> h(n + 1, 0);
    h[0] = binom(d + n, n);
    h[n] = binom(-d - 1, n);
    return h;
}

/// Kuenneth: profile of an external product is the convolution of the
/// factor profiles.
inline std::vector<Int> product(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<Int> p1(std::int64_t d) { return projectiveSpace(1, d); }

inline std::vector<Int> p1xp1(std::int64_t a, std::int64_t b) { return product(p1(a), p1(b)); }

inline std::vector<Int> p1xp1xp1(std::int64_t a, std::int64_t b, std::int64_t c) {
    return product(product(p1(a), p1(b)), p1(c));
}

inline std::vector<Int> p1xp2(std::int64_t a, std::int64_t b) {
    return product(p1(a), projectiveSpace(2, b));
}

inline bool matches(const std::vector<std::int64_t>& computed, const std::vector<Int>& expected) {
    if (computed.size() != expected.size()) return false;
    for (std::size_t i = 0; i < computed.size(); ++i)
        if (Int(computed[i]) != expected[i]) return false;
    return true;
}

}  // namespace oracle
