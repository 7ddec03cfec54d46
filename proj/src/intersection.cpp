#include "toricmorse/intersection.hpp"

#include "toricmorse/linalg.hpp"

#include <random>

namespace toricmorse {

Rat ChiPolynomial::evaluate(const Int& s, const Int& t) const {
    Rat value = 0;
    Int sPow = 1;
    for (int i = 0; i <= degree; ++i) {
        Int tPow = 1;
        for (int j = 0; i + j <= degree; ++j) {
            if (coeffs(i, j) != 0) value += coeffs(i, j) * Rat(sPow * tPow);
            tPow *= t;
        }
        sPow *= s;
    }
    return value;
}

ChiPolynomial chiPolynomial(const ToricVariety& X, const Divisor& F, const Divisor& G,
                            const EngineOptions& options) {
    const int n = X.dim();

    // monomials s^i t^j with i + j <= n, and the triangular sample grid
    std::vector<std::pair<int, int>> monomials;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) monomials.emplace_back(i, j);
    const Index m = static_cast<Index>(monomials.size());

    auto chiAt = [&](int s, int t) {
        return eulerChar(X, F * s + G * t, options);
    };

    RatMatrix vand(m, m);
    RatVector values(m);
    {
        Index row = 0;
        for (int s = 0; s <= n; ++s) {
            for (int t = 0; s + t <= n; ++t, ++row) {
                for (Index col = 0; col < m; ++col) {
                    auto [i, j] = monomials[col];
                    vand(row, col) = Rat(intPow(Int(s), i) * intPow(Int(t), j));
                }
                values[row] = Rat(chiAt(s, t));
            }
        }
    }
    auto solution = solveRational(vand, values);
    if (!solution) throw InternalError("chiPolynomial: interpolation system singular");

    ChiPolynomial poly;
    poly.degree = n;
    poly.coeffs = RatMatrix::Zero(n + 1, n + 1);
    for (Index col = 0; col < m; ++col) {
        auto [i, j] = monomials[col];
        poly.coeffs(i, j) = (*solution)[col];
    }

    // verify on the remaining square-grid points ...
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t) {
            if (s + t <= n) continue;
            if (poly.evaluate(s, t) != Rat(chiAt(s, t)))
                throw InternalError("chiPolynomial: square-grid verification failed at (" +
                                    std::to_string(s) + "," + std::to_string(t) + ")");
        }
    // ... and at three off-grid points from [n+1, n+3]^2
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> offGrid(n + 1, n + 3);
    for (int check = 0; check < 3; ++check) {
        int s = offGrid(rng), t = offGrid(rng);
        if (poly.evaluate(s, t) != Rat(chiAt(s, t)))
            throw InternalError("chiPolynomial: off-grid verification failed at (" +
                                std::to_string(s) + "," + std::to_string(t) + ")");
    }
    return poly;
}

IntersectionTable intersectionTable(const ToricVariety& X, const Divisor& F, const Divisor& G,
                                    const EngineOptions& options) {
    const int n = X.dim();
    ChiPolynomial poly = chiPolynomial(X, F, G, options);
    IntersectionTable table;
    table.numbers.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rat entry = poly.topCoefficient(i) * Rat(factorial(n)) / Rat(binomial(n, i));
        if (!isIntegral(entry))
            throw InternalError("intersectionTable: non-integer entry " + entry.str() +
                                " at i=" + std::to_string(i));
        table.numbers.push_back(toInt(entry));
    }
    return table;
}

Int degreeViaEhrhart(const ToricVariety& X, const Divisor& D) {
    if (!isNef(X, D)) throw std::invalid_argument("degreeViaEhrhart: divisor is not nef");
    const int n = X.dim();

    // Point counts of the dilated polytopes, clipped to a box that surely
    // contains them (the arrangement-vertex box of each dilation).
    RatVector counts(n + 1);
    for (int k = 0; k <= n; ++k) {
        HalfSpaceSystem hs = polytopeOf(X, D * k);
        counts[k] = Rat(countPoints(hs, arrangementVertexBox(hs)));
    }

    // Exact univariate interpolation at 0..n; leading coefficient times n!.
    RatMatrix vand(n + 1, n + 1);
    for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j) vand(k, j) = Rat(intPow(Int(k), j));
    auto coeffs = solveRational(vand, counts);
    if (!coeffs) throw InternalError("degreeViaEhrhart: Vandermonde solve failed");
    Rat degree = (*coeffs)[n] * Rat(factorial(n));
    if (!isIntegral(degree))
        throw InternalError("degreeViaEhrhart: non-integer degree " + degree.str());
    return toInt(degree);
}

}  // namespace toricmorse
