#include "toricmorse/cohomology.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace toricmorse;

namespace {

CoordVector coords(std::initializer_list<Coord> values) {
    CoordVector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (Coord c : values) v[i++] = c;
    return v;
}

Divisor p1xp1Class(Coord a, Coord b) { return Divisor(coords({0, a, 0, b})); }

}  // namespace

TEST_CASE("cohomology of line bundles on P2") {
    ToricVariety p2 = makeBuiltin("P2");
    CohomologyProfile twoLines = cohomologyDims(p2, Divisor(coords({0, 0, 2})));
    REQUIRE(twoLines.dims == std::vector<std::int64_t>{6, 0, 0});

    CohomologyProfile negative = cohomologyDims(p2, Divisor(coords({0, 0, -3})));
    REQUIRE(negative.dims == std::vector<std::int64_t>{0, 0, 1});

    for (Coord d = -6; d <= 6; ++d) {
        CohomologyProfile profile = cohomologyDims(p2, Divisor(coords({0, 0, d})));
        INFO("d=" << d);
        REQUIRE(oracle::matches(profile.dims, oracle::projectiveSpace(2, d)));
    }
}

TEST_CASE("cohomology on P1xP1 matches the Kuenneth oracle") {
    ToricVariety q = makeBuiltin("P1xP1");
    CohomologyProfile mixed = cohomologyDims(q, p1xp1Class(3, -3));
    REQUIRE(mixed.dims == std::vector<std::int64_t>{0, 8, 0});

    for (Coord a = -4; a <= 4; ++a)
        for (Coord b = -4; b <= 4; ++b) {
            CohomologyProfile profile = cohomologyDims(q, p1xp1Class(a, b));
            INFO("(a,b)=(" << a << "," << b << ")");
            REQUIRE(oracle::matches(profile.dims, oracle::p1xp1(a, b)));
        }
}

TEST_CASE("cohomology on threefold products matches the Kuenneth oracle") {
    ToricVariety c = makeBuiltin("P1xP1xP1");
    for (Coord a : {-3, -1, 0, 2})
        for (Coord b : {-2, 1, 3})
            for (Coord d : {-4, 0, 1}) {
                CohomologyProfile profile =
                    cohomologyDims(c, Divisor(coords({0, a, 0, b, 0, d})));
                INFO("(a,b,d)=(" << a << "," << b << "," << d << ")");
                REQUIRE(oracle::matches(profile.dims, oracle::p1xp1xp1(a, b, d)));
            }

    ToricVariety m = makeBuiltin("P1xP2");
    for (Coord a : {-3, -1, 0, 2})
        for (Coord b : {-4, -2, 0, 3}) {
            CohomologyProfile profile = cohomologyDims(m, Divisor(coords({0, a, 0, 0, b})));
            INFO("(a,b)=(" << a << "," << b << ")");
            REQUIRE(oracle::matches(profile.dims, oracle::p1xp2(a, b)));
        }
}

TEST_CASE("cohomology on P3 and P4") {
    ToricVariety p3 = makeBuiltin("P3");
    for (Coord d : {-6, -4, -3, 0, 1, 5}) {
        CohomologyProfile profile = cohomologyDims(p3, Divisor(coords({0, 0, 0, d})));
        REQUIRE(oracle::matches(profile.dims, oracle::projectiveSpace(3, d)));
    }
    ToricVariety p4 = makeBuiltin("P4");
    CohomologyProfile profile = cohomologyDims(p4, Divisor(coords({0, 0, 0, 0, -5})));
    REQUIRE(oracle::matches(profile.dims, oracle::projectiveSpace(4, -5)));
}

TEST_CASE("structure sheaf has chi = 1 on every builtin") {
    for (const char* name : {"P1", "P2", "P3", "P4", "P1xP1", "P1xP1xP1", "P1xP2"}) {
        ToricVariety x = makeBuiltin(name);
        INFO(name);
        CohomologyProfile profile = cohomologyDims(x, x.zeroDivisor());
        REQUIRE(profile.dims[0] == 1);
        for (std::size_t q = 1; q < profile.dims.size(); ++q) REQUIRE(profile.dims[q] == 0);
        REQUIRE(eulerChar(x, x.zeroDivisor()) == 1);
    }
}

TEST_CASE("Euler characteristic is polynomial through negative multiples") {
    ToricVariety p2 = makeBuiltin("P2");
    for (Coord d = -5; d <= 5; ++d)
        REQUIRE(eulerChar(p2, Divisor(coords({0, 0, d}))) == (d + 1) * (d + 2) / 2);

    ToricVariety q = makeBuiltin("P1xP1");
    for (Coord a = -3; a <= 3; ++a)
        for (Coord b = -3; b <= 3; ++b)
            REQUIRE(eulerChar(q, p1xp1Class(a, b)) == (a + 1) * (b + 1));
}

TEST_CASE("h^0 equals the section polytope point count") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<Coord> entry(-5, 5);
    for (const char* name : {"P2", "P1xP1", "P3", "P1xP2"}) {
        ToricVariety x = makeBuiltin(name);
        for (int trial = 0; trial < 25; ++trial) {
            CoordVector c(x.rayCount());
            for (Index i = 0; i < c.size(); ++i) c[i] = entry(rng);
            Divisor d(c);
            HalfSpaceSystem hs = polytopeOf(x, d);
            Int count = countPoints(hs, arrangementVertexBox(hs));
            INFO(name << " trial " << trial);
            REQUIRE(Int(cohomologyDims(x, d).dims[0]) == count);
        }
    }
}

TEST_CASE("Serre symmetry on random divisors") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<Coord> entry(-4, 4);
    for (const char* name : {"P2", "P1xP1", "P1xP1xP1"}) {
        ToricVariety x = makeBuiltin(name);
        Divisor canonical = x.canonical();
        for (int trial = 0; trial < 20; ++trial) {
            CoordVector c(x.rayCount());
            for (Index i = 0; i < c.size(); ++i) c[i] = entry(rng);
            Divisor d(c);
            auto direct = cohomologyDims(x, d).dims;
            auto dual = cohomologyDims(x, canonical - d).dims;
            std::reverse(dual.begin(), dual.end());
            INFO(name << " trial " << trial);
            REQUIRE(direct == dual);
        }
    }
}

TEST_CASE("cohomology is invariant under principal shifts") {
    ToricVariety q = makeBuiltin("P1xP1");
    Divisor d = p1xp1Class(2, -3);
    auto reference = cohomologyDims(q, d).dims;
    for (Coord mx = -2; mx <= 2; ++mx)
        for (Coord my = -2; my <= 2; ++my)
            REQUIRE(cohomologyDims(q, d + principalDivisor(q, coords({mx, my}))).dims ==
                    reference);

    ToricVariety p3 = makeBuiltin("P3");
    Divisor e(coords({1, 0, -4, 2}));
    auto reference3 = cohomologyDims(p3, e).dims;
    REQUIRE(cohomologyDims(p3, e + principalDivisor(p3, coords({-1, 2, 1}))).dims == reference3);
}

TEST_CASE("support region certificate reports shell data") {
    ToricVariety p2 = makeBuiltin("P2");
    SupportRegion region = supportRegion(p2, Divisor(coords({0, 0, -3})));
    REQUIRE(region.certificate.shellPoints > 0);
    REQUIRE(region.certificate.distinctPatterns > 0);
    // the only contributing point of O(-3) is (-1,-1)
    REQUIRE(region.box.contains(coords({-1, -1})));
}

TEST_CASE("vanishing scan finds k0 = 1 for ample pairs and rejects non-ample input") {
    ToricVariety p2 = makeBuiltin("P2");
    Divisor line(coords({0, 0, 1}));
    VanishingScanResult r = vanishingScan(p2, line, line, 10, 5);
    REQUIRE(r.k0.has_value());
    REQUIRE(*r.k0 == 1);

    ToricVariety q = makeBuiltin("P1xP1");
    VanishingScanResult r2 = vanishingScan(q, p1xp1Class(2, 1), p1xp1Class(1, 1), 10, 5);
    REQUIRE(r2.k0.has_value());
    REQUIRE(*r2.k0 == 1);

    REQUIRE_THROWS_AS(vanishingScan(q, p1xp1Class(1, -1), p1xp1Class(1, 1), 10, 5),
                      std::invalid_argument);
}

TEST_CASE("ample multiples have sections only, so chi_q collapses to (-1)^q chi") {
    ToricVariety q = makeBuiltin("P1xP1");
    Divisor f = p1xp1Class(2, 1);
    for (int k = 1; k <= 10; ++k) {
        CohomologyProfile profile = cohomologyDims(q, f * k);
        REQUIRE(profile.dims[1] == 0);
        REQUIRE(profile.dims[2] == 0);
        REQUIRE(profile.dims[0] == (2 * k + 1) * (k + 1));
    }
}

TEST_CASE("parallel sweeps agree with the serial result") {
    ToricVariety q = makeBuiltin("P1xP1");
    Divisor d = p1xp1Class(7, -6);
    EngineOptions serial;
    EngineOptions parallel;
    parallel.threads = 8;
    REQUIRE(cohomologyDims(q, d, serial).dims == cohomologyDims(q, d, parallel).dims);
}
