#include "toricmorse/feasibility.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace toricmorse {

namespace {

struct Row {
    std::vector<Rat> coeffs;  // coeffs . x >= rhs
    Rat rhs;
    bool strict;
};

// Normalize so the first nonzero coefficient (or the rhs for trivial rows)
// has absolute value 1; keeps the duplicate filter effective.
void normalize(Row& row) {
    Rat scale = 0;
    for (const Rat& c : row.coeffs)
        if (c != 0) { scale = boost::multiprecision::abs(c); break; }
    if (scale == 0) {
        if (row.rhs != 0) scale = boost::multiprecision::abs(row.rhs);
    }
    if (scale == 0 || scale == 1) return;
    for (Rat& c : row.coeffs) c /= scale;
    row.rhs /= scale;
}

}  // namespace

bool systemFeasible(std::vector<LinearConstraint> constraints, int numVars) {
    std::vector<Row> rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints) {
        if (c.coeffs.size() != numVars) throw std::invalid_argument("constraint arity mismatch");
        Row r;
        r.coeffs.assign(c.coeffs.data(), c.coeffs.data() + numVars);
        r.rhs = c.rhs;
        r.strict = c.strict;
        normalize(r);
        rows.push_back(std::move(r));
    }

    for (int var = numVars - 1; var >= 0; --var) {
        std::vector<Row> lower, upper, rest;
        for (Row& r : rows) {
            if (r.coeffs[var] > 0)
                lower.push_back(std::move(r));  // x_var >= (rhs - ...) / c
            else if (r.coeffs[var] < 0)
                upper.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        std::set<std::pair<std::vector<Rat>, std::pair<Rat, bool>>> dedupe;
        auto push = [&](Row r) {
            normalize(r);
            auto key = std::make_pair(r.coeffs, std::make_pair(r.rhs, r.strict));
            if (dedupe.insert(key).second) rest.push_back(std::move(r));
        };
        for (const Row& lo : lower) {
            for (const Row& up : upper) {
                // eliminate: up.c[var] * lo + (-lo.c[var]) * up scaled positive
                Rat a = lo.coeffs[var];   // > 0
                Rat b = -up.coeffs[var];  // > 0
                Row combined;
                combined.coeffs.resize(numVars);
                for (int j = 0; j < numVars; ++j)
                    combined.coeffs[j] = b * lo.coeffs[j] + a * up.coeffs[j];
                combined.rhs = b * lo.rhs + a * up.rhs;
                combined.strict = lo.strict || up.strict;
                combined.coeffs[var] = 0;
                push(std::move(combined));
            }
        }
        rows = std::move(rest);
    }

    for (const Row& r : rows) {
        bool allZero = true;
        for (const Rat& c : r.coeffs)
            if (c != 0) { allZero = false; break; }
        if (!allZero) continue;  // cannot happen after full elimination
        if (r.strict ? !(Rat(0) > r.rhs) : !(Rat(0) >= r.rhs)) return false;
    }
    return true;
}

}  // namespace toricmorse
