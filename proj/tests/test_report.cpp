#include "toricmorse/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace toricmorse;

namespace {

CoordVector coords(std::initializer_list<Coord> values) {
    CoordVector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (Coord c : values) v[i++] = c;
    return v;
}

}  // namespace

TEST_CASE("CSV rows round-trip exactly") {
    CsvRow row;
    row.variety = "P1xP1";
    row.q = "1";
    row.k = "10";
    row.j = "";
    row.kind = "weak";
    row.measured = Int(99);
    row.bound = Rat(500);
    row.margin = Rat(401);
    row.verdict = "PASS";
    CsvRow parsed = parseCsvLine(toCsvLine(row));
    REQUIRE(parsed.variety == row.variety);
    REQUIRE(parsed.q == row.q);
    REQUIRE(parsed.k == row.k);
    REQUIRE(parsed.j == row.j);
    REQUIRE(parsed.kind == row.kind);
    REQUIRE(parsed.measured == row.measured);
    REQUIRE(parsed.bound == row.bound);
    REQUIRE(parsed.margin == row.margin);
    REQUIRE(parsed.verdict == row.verdict);

    // negative rationals keep canonical sign and lowest terms
    row.bound = Rat(-7, 3);
    row.margin = row.bound - Rat(row.measured);
    parsed = parseCsvLine(toCsvLine(row));
    REQUIRE(parsed.bound == Rat(-7, 3));
    REQUIRE(parsed.margin == row.margin);
}

TEST_CASE("report CSV reproduces verdicts when re-checked from parsed rows") {
    ToricVariety x = makeBuiltin("P1xP1");
    Divisor F(coords({0, 2, 0, 1}));
    Divisor G(coords({0, 1, 0, 2}));
    VerificationReport report = verifyWeak(x, F, G, 1, {1, 24});
    auto rows = toCsvRows(report);
    REQUIRE(rows.size() == 24);

    std::ostringstream out;
    writeCsv(out, rows);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    REQUIRE(line == kCsvHeader);

    // re-parse and recompute the fit/threshold policy from the rows alone
    std::vector<std::pair<int, Int>> samples;
    std::optional<int> kStrict;
    std::vector<BoundRow> parsedRows;
    while (std::getline(in, line)) {
        CsvRow parsed = parseCsvLine(line);
        REQUIRE(parsed.verdict == "PASS");
        BoundRow row;
        row.k = std::stoi(parsed.k);
        row.measured = static_cast<std::int64_t>(parsed.measured);
        row.bound = parsed.bound;
        parsedRows.push_back(row);
        samples.emplace_back(row.k, parsed.measured);
    }
    for (auto it = parsedRows.rbegin(); it != parsedRows.rend(); ++it) {
        if (Rat(it->measured) <= it->bound)
            kStrict = it->k;
        else
            break;
    }
    FitResult fit = fitLeading(samples, x.dim());
    REQUIRE(fit.leading.has_value());
    // bound coefficient recovered from any row: bound / k^n
    Rat coefficient = parsedRows.back().bound / Rat(intPow(Int(parsedRows.back().k), x.dim()));
    bool pass = fit.leading && *fit.leading <= coefficient && kStrict.has_value();
    REQUIRE(pass);
}

TEST_CASE("emission is byte-stable") {
    ToricVariety x = makeBuiltin("P2");
    Divisor F(coords({0, 0, 2}));
    Divisor G(coords({0, 0, 1}));
    auto emit = [&]() {
        std::ostringstream out;
        writeCsv(out, toCsvRows(verifyStrong(x, F, G, 1, {1, 12})));
        return out.str();
    };
    REQUIRE(emit() == emit());
}
