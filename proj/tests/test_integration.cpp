#include "toricmorse/bounds.hpp"
#include "toricmorse/fan_json.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace toricmorse;

namespace {

CoordVector coords(std::initializer_list<Coord> values) {
    CoordVector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (Coord c : values) v[i++] = c;
    return v;
}

/// Degree-6 del Pezzo surface (hexagon fan), the smallest interesting
/// non-catalog variety: Picard rank 4, six (-1)-curves.
ToricVariety delPezzo6() {
    Fan fan = parseFanText(
        R"({"rank":2,"rays":[[1,0],[1,1],[0,1],[-1,0],[-1,-1],[0,-1]],
            "max_cones":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]})");
    return ToricVariety("dP6", std::move(fan));
}

}  // namespace

TEST_CASE("del Pezzo of degree 6 certifies and has the classical invariants") {
    ToricVariety x = delPezzo6();
    REQUIRE(x.ampleWitness().has_value());

    Divisor antiCanonical = x.zeroDivisor() - x.canonical();
    REQUIRE(isAmple(x, antiCanonical));
    REQUIRE(cohomologyDims(x, antiCanonical).dims == std::vector<std::int64_t>{7, 0, 0});

    IntersectionTable kk = intersectionTable(x, antiCanonical, antiCanonical);
    REQUIRE(kk[0] == 6);  // K^2 = 9 - 3
    REQUIRE(degreeViaEhrhart(x, antiCanonical) == 6);
}

TEST_CASE("nef-but-not-ample classes on the del Pezzo are told apart") {
    ToricVariety x = delPezzo6();
    // -K + D_0 pairs to zero against the (-1)-curve D_0: nef, not ample
    Divisor borderline(coords({2, 1, 1, 1, 1, 1}));
    REQUIRE(isNef(x, borderline));
    REQUIRE_FALSE(isAmple(x, borderline));
    REQUIRE_THROWS_AS(verifyWeak(x, borderline, x.zeroDivisor() - x.canonical(), 1, {1, 8}),
                      std::invalid_argument);
}

TEST_CASE("the bounds hold on the del Pezzo for an off-catalog ample pair") {
    ToricVariety x = delPezzo6();
    Divisor F(coords({1, 2, 2, 2, 2, 2}));
    Divisor G(coords({1, 1, 1, 1, 1, 1}));
    REQUIRE(isAmple(x, F));
    REQUIRE(isAmple(x, G));
    for (int q = 0; q <= 2; ++q) {
        REQUIRE(verifyWeak(x, F, G, q, {1, 16}).verdict == Verdict::Pass);
        VerificationReport strong = verifyStrong(x, F, G, q, {1, 16});
        REQUIRE(strong.verdict == Verdict::Pass);
        if (q == 2) REQUIRE(strong.equalityFlag);
    }
    for (const auto& check : subadditivityMatrix(x, 40, 11)) REQUIRE(check.holds);
}

TEST_CASE("restriction of -K to a (-1)-curve has degree 1") {
    ToricVariety x = delPezzo6();
    PrimeRestriction r = restrictToPrime(x, x.zeroDivisor() - x.canonical(), 0);
    REQUIRE(r.variety.dim() == 1);
    // -K . D_0 = 1 on a del Pezzo, so the restriction is O(1) on P1
    REQUIRE(cohomologyDims(r.variety, r.divisor).dims == std::vector<std::int64_t>{2, 0});
}

TEST_CASE("threefold restriction lands on the expected surface") {
    ToricVariety x = makeBuiltin("P1xP1xP1");
    // class (a,b,c) restricted to the divisor of +e1 is the (b,c) class on P1xP1
    PrimeRestriction r = restrictToPrime(x, Divisor(coords({0, 5, 0, 3, 0, 2})), 0);
    REQUIRE(r.variety.dim() == 2);
    REQUIRE(r.variety.rayCount() == 4);
    auto dims = cohomologyDims(r.variety, r.divisor).dims;
    REQUIRE(oracle::matches(dims, oracle::p1xp1(3, 2)));
}

TEST_CASE("intermediate bounds with a = 2 along the half-speed diagonal") {
    ToricVariety x = makeBuiltin("P1xP1");
    Divisor F(coords({0, 2, 0, 1}));
    Divisor G(coords({0, 1, 0, 2}));
    IntermediateOptions io;
    io.a = 2;
    io.diagonalDivisor = 2;
    for (int q = 0; q <= 2; ++q) {
        for (BoundKind kind : {BoundKind::IntermediateWeak, BoundKind::IntermediateStrong}) {
            VerificationReport r = verifyIntermediate(x, F, G, q, kind, {1, 16}, io);
            INFO("q=" << q << " kind=" << toString(kind));
            REQUIRE(r.verdict == Verdict::Pass);
        }
    }
    // spot check one row: k=8, j=3, a=2 gives kF - 6G = class (10, -4)
    VerificationReport weak =
        verifyIntermediate(x, F, G, 1, BoundKind::IntermediateWeak, {1, 16}, io);
    bool seen = false;
    for (const BoundRow& row : weak.rows)
        if (row.k == 8 && row.j == 3) {
            seen = true;
            REQUIRE(Int(row.measured) == oracle::p1xp1(10, -4)[1]);
            REQUIRE(row.bound == Rat(8) * 6 * 5);  // k^{n-q} (ja)^q F.G
        }
    REQUIRE(seen);
}
