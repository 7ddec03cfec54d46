#include "toricmorse/bounds.hpp"
#include "toricmorse/fan_json.hpp"
#include "toricmorse/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tms = toricmorse;

namespace {

// Exit codes: 0 all PASS, 1 FAIL, 2 inconclusive, 3 usage/input error,
// 4 malformed fan file, 5 fan validation failure, 6 internal error.
enum ExitCode {
    kPass = 0,
    kFail = 1,
    kInconclusive = 2,
    kUsage = 3,
    kFormat = 4,
    kValidation = 5,
    kInternal = 6,
};

struct Options {
    std::string builtin;
    std::vector<tms::Coord> params;
    std::string fanPath;
    std::string divisorF, divisorG, divisorH, divisorD;
    std::vector<int> qList;
    int kMin = 1;
    int kMax = 0;  // 0: default window for the dimension
    int jMax = -1; // -1: up to k
    int a = 1;
    int c = 1;
    int aMax = 5;
    int scanKMax = 10;
    int draws = 100;
    int ray = -1;
    unsigned long seed = 12345;
    int parallel = 0;  // 0: from environment, else 1
    std::string outPath;
};

tms::CoordVector parseCoeffs(const std::string& text, tms::Index expected, const std::string& what) {
    std::vector<tms::Coord> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(static_cast<tms::Coord>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": bad integer '" + item + "'");
        }
    }
    if (static_cast<tms::Index>(values.size()) != expected)
        throw std::invalid_argument(what + ": expected " + std::to_string(expected) +
                                    " comma-separated coefficients, got " +
                                    std::to_string(values.size()));
    tms::CoordVector out(expected);
    for (tms::Index i = 0; i < expected; ++i) out[i] = values[i];
    return out;
}

tms::ToricVariety loadVariety(const Options& opt) {
    if (!opt.builtin.empty() && !opt.fanPath.empty())
        throw std::invalid_argument("give either --builtin or --fan, not both");
    if (!opt.builtin.empty()) return tms::makeBuiltin(opt.builtin, opt.params);
    if (!opt.fanPath.empty()) {
        tms::Fan fan = tms::parseFanFile(opt.fanPath);
        return tms::ToricVariety(std::filesystem::path(opt.fanPath).stem().string(), std::move(fan));
    }
    throw std::invalid_argument("a variety is required: --builtin NAME or --fan FILE");
}

tms::EngineOptions engineOptions(const Options& opt) {
    tms::EngineOptions eo;
    if (opt.parallel > 0) {
        eo.threads = opt.parallel;
    } else if (const char* env = std::getenv("TORICMORSE_THREADS")) {
        int parsed = std::atoi(env);
        eo.threads = parsed > 0 ? parsed : 1;
    }
    return eo;
}

std::vector<int> qValues(const Options& opt, int dim) {
    std::vector<int> qs = opt.qList;
    if (qs.empty())
        for (int q = 0; q <= dim; ++q) qs.push_back(q);
    for (int q : qs)
        if (q < 0 || q > dim)
            throw std::invalid_argument("q=" + std::to_string(q) + " out of range 0.." +
                                        std::to_string(dim));
    return qs;
}

tms::KRange kRange(const Options& opt, int dim) {
    tms::KRange range;
    range.lo = opt.kMin;
    range.hi = opt.kMax > 0 ? opt.kMax : tms::defaultKMax(dim);
    if (range.lo < 1 || range.hi < range.lo) throw std::invalid_argument("bad k range");
    return range;
}

int worst(int a, int b) { return std::max(a, b); }

int verdictExit(tms::Verdict v) {
    switch (v) {
        case tms::Verdict::Pass: return kPass;
        case tms::Verdict::Fail: return kFail;
        case tms::Verdict::Inconclusive: return kInconclusive;
    }
    return kInternal;
}

void printReport(const tms::VerificationReport& report) {
    std::cout << "# " << tms::toString(report.kind) << " bound, q=" << report.q << ", "
              << report.variety << "\n";
    std::cout << "# coefficient " << report.spec.leadingCoefficient << "  ["
              << report.spec.description << "]\n";
    for (const tms::BoundRow& row : report.rows) {
        std::cout << "k=" << row.k;
        if (row.j) std::cout << " j=" << *row.j;
        std::cout << " measured=" << row.measured << " bound=" << row.bound
                  << " margin=" << row.margin() << "\n";
    }
    std::cout << "# fitted=";
    if (report.fit.leading)
        std::cout << *report.fit.leading << " period=" << *report.fit.period;
    else
        std::cout << "inconclusive";
    std::cout << " k_strict=";
    if (report.kStrict)
        std::cout << *report.kStrict;
    else
        std::cout << "none";
    if (report.coincident) std::cout << " (coincident with weak bound)";
    if (report.spec.q == report.spec.n && report.kind == tms::BoundKind::Strong)
        std::cout << " equality=" << (report.equalityFlag ? "yes" : "no");
    std::cout << "\nverdict: " << tms::toString(report.verdict) << "\n";
}

void maybeWriteCsv(const Options& opt, const std::vector<tms::CsvRow>& rows) {
    if (opt.outPath.empty()) return;
    std::ofstream out(opt.outPath, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + opt.outPath);
    tms::writeCsv(out, rows);
}

int runCohomology(const Options& opt) {
    tms::ToricVariety X = loadVariety(opt);
    if (opt.divisorD.empty()) throw std::invalid_argument("cohomology requires --D");
    tms::Divisor D(parseCoeffs(opt.divisorD, X.rayCount(), "--D"));
    tms::CohomologyProfile profile = tms::cohomologyDims(X, D, engineOptions(opt));
    for (std::size_t i = 0; i < profile.dims.size(); ++i)
        std::cout << (i ? "," : "") << profile.dims[i];
    std::cout << "\n";
    std::vector<tms::CsvRow> rows;
    for (std::size_t i = 0; i < profile.dims.size(); ++i) {
        tms::CsvRow row;
        row.variety = X.name();
        row.q = std::to_string(i);
        row.kind = "cohomology";
        row.measured = tms::Int(profile.dims[i]);
        row.bound = tms::Rat(row.measured);
        row.verdict = "INFO";
        rows.push_back(std::move(row));
    }
    maybeWriteCsv(opt, rows);
    return kPass;
}

int runIntersect(const Options& opt) {
    tms::ToricVariety X = loadVariety(opt);
    if (opt.divisorF.empty() || opt.divisorG.empty())
        throw std::invalid_argument("intersect requires --F and --G");
    tms::Divisor F(parseCoeffs(opt.divisorF, X.rayCount(), "--F"));
    tms::Divisor G(parseCoeffs(opt.divisorG, X.rayCount(), "--G"));
    tms::IntersectionTable table = tms::intersectionTable(X, F, G, engineOptions(opt));
    for (int i = 0; i <= table.degree(); ++i) std::cout << (i ? "," : "") << table[i];
    std::cout << "\n";
    std::vector<tms::CsvRow> rows;
    for (int i = 0; i <= table.degree(); ++i) {
        tms::CsvRow row;
        row.variety = X.name();
        row.q = std::to_string(i);
        row.kind = "intersection";
        row.measured = table[i];
        row.bound = tms::Rat(table[i]);
        row.verdict = "INFO";
        rows.push_back(std::move(row));
    }
    maybeWriteCsv(opt, rows);
    return kPass;
}

int runVerify(const Options& opt, tms::BoundKind kind) {
    tms::ToricVariety X = loadVariety(opt);
    if (opt.divisorF.empty() || opt.divisorG.empty())
        throw std::invalid_argument("verification requires --F and --G");
    tms::Divisor F(parseCoeffs(opt.divisorF, X.rayCount(), "--F"));
    tms::Divisor G(parseCoeffs(opt.divisorG, X.rayCount(), "--G"));
    tms::EngineOptions eo = engineOptions(opt);
    tms::KRange range = kRange(opt, X.dim());

    int exit = kPass;
    std::vector<tms::CsvRow> rows;
    for (int q : qValues(opt, X.dim())) {
        tms::VerificationReport report;
        switch (kind) {
            case tms::BoundKind::Weak:
                report = tms::verifyWeak(X, F, G, q, range, eo);
                break;
            case tms::BoundKind::Strong:
                report = tms::verifyStrong(X, F, G, q, range, eo);
                break;
            default: {
                tms::IntermediateOptions io;
                io.a = opt.a;
                io.diagonalDivisor = opt.c;
                if (opt.jMax >= 0) io.jMax = opt.jMax;
                report = tms::verifyIntermediate(X, F, G, q, kind, range, io, eo);
                break;
            }
        }
        printReport(report);
        exit = worst(exit, verdictExit(report.verdict));
        auto csv = tms::toCsvRows(report);
        rows.insert(rows.end(), csv.begin(), csv.end());
    }
    maybeWriteCsv(opt, rows);
    return exit;
}

int runVerifyIntermediate(const Options& opt) {
    // both kinds, matching the paper-level statement that has an h^q and a
    // chi_q form
    tms::ToricVariety X = loadVariety(opt);
    if (opt.divisorF.empty() || opt.divisorG.empty())
        throw std::invalid_argument("verification requires --F and --G");
    tms::Divisor F(parseCoeffs(opt.divisorF, X.rayCount(), "--F"));
    tms::Divisor G(parseCoeffs(opt.divisorG, X.rayCount(), "--G"));
    tms::EngineOptions eo = engineOptions(opt);
    tms::KRange range = kRange(opt, X.dim());
    tms::IntermediateOptions io;
    io.a = opt.a;
    io.diagonalDivisor = opt.c;
    if (opt.jMax >= 0) io.jMax = opt.jMax;

    int exit = kPass;
    std::vector<tms::CsvRow> rows;
    for (int q : qValues(opt, X.dim())) {
        for (tms::BoundKind kind :
             {tms::BoundKind::IntermediateWeak, tms::BoundKind::IntermediateStrong}) {
            tms::VerificationReport report = tms::verifyIntermediate(X, F, G, q, kind, range, io, eo);
            printReport(report);
            exit = worst(exit, verdictExit(report.verdict));
            auto csv = tms::toCsvRows(report);
            rows.insert(rows.end(), csv.begin(), csv.end());
        }
    }
    maybeWriteCsv(opt, rows);
    return exit;
}

int runSubadditivity(const Options& opt) {
    tms::ToricVariety X = loadVariety(opt);
    tms::EngineOptions eo = engineOptions(opt);
    std::vector<tms::CsvRow> rows;
    bool allHold = true;
    if (!opt.divisorD.empty()) {
        if (opt.ray < 0) throw std::invalid_argument("single check requires --ray");
        std::vector<int> qs = opt.qList.empty() ? std::vector<int>{0} : opt.qList;
        for (int q : qs) {
            tms::SubadditivityCheck check = tms::verifySubadditivity(
                X, tms::Divisor(parseCoeffs(opt.divisorD, X.rayCount(), "--D")), opt.ray, q, eo);
            std::cout << "q=" << q << " ray=" << check.ray << " chi_q(B)=" << check.chiTotal
                      << " chi_q(B-D)=" << check.chiSub << " chi_q(B|D)=" << check.chiRestriction
                      << " -> " << (check.holds ? "PASS" : "FAIL") << "\n";
            allHold = allHold && check.holds;
            rows.push_back(tms::toCsvRow(X.name(), check, 0));
        }
    } else {
        auto checks = tms::subadditivityMatrix(X, opt.draws, opt.seed, eo);
        int index = 0;
        for (const auto& check : checks) {
            allHold = allHold && check.holds;
            rows.push_back(tms::toCsvRow(X.name(), check, index++));
        }
        std::cout << checks.size() << " randomized draws (seed " << opt.seed << "): "
                  << (allHold ? "all hold" : "VIOLATION FOUND") << "\n";
    }
    maybeWriteCsv(opt, rows);
    return allHold ? kPass : kFail;
}

int runVanishingScan(const Options& opt, std::vector<tms::CsvRow>* collect = nullptr) {
    tms::ToricVariety X = loadVariety(opt);
    if (opt.divisorF.empty()) throw std::invalid_argument("vanishing-scan requires --F");
    tms::Divisor F(parseCoeffs(opt.divisorF, X.rayCount(), "--F"));
    std::string hText = !opt.divisorH.empty() ? opt.divisorH : opt.divisorG;
    if (hText.empty()) throw std::invalid_argument("vanishing-scan requires --H (or --G)");
    tms::Divisor H(parseCoeffs(hText, X.rayCount(), "--H"));
    tms::EngineOptions eo = engineOptions(opt);

    tms::VanishingScanResult result = tms::vanishingScan(X, F, H, opt.scanKMax, opt.aMax, eo);
    if (result.k0)
        std::cout << "k0=" << *result.k0 << " (kmax=" << result.kMax << ", amax=" << result.aMax
                  << ")\n";
    else
        std::cout << "none found <= " << result.kMax << "\n";

    std::vector<tms::CsvRow> rows;
    for (int k = 1; k <= result.kMax; ++k) {
        std::int64_t mass = 0;  // total higher cohomology across the a-grid at this k
        for (int a = 0; a <= result.aMax; ++a) {
            tms::CohomologyProfile profile = tms::cohomologyDims(X, F * k + H * a, eo);
            for (std::size_t q = 1; q < profile.dims.size(); ++q) mass += profile.dims[q];
        }
        tms::CsvRow row;
        row.variety = X.name();
        row.k = std::to_string(k);
        row.kind = "vanishing";
        row.measured = tms::Int(mass);
        row.bound = 0;
        row.margin = -tms::Rat(mass);
        row.verdict = (result.k0 && k >= *result.k0) ? "PASS" : (mass == 0 ? "INFO" : "FAIL");
        rows.push_back(std::move(row));
    }
    if (collect)
        collect->insert(collect->end(), rows.begin(), rows.end());
    else
        maybeWriteCsv(opt, rows);
    return result.k0 ? kPass : kInconclusive;
}

int runReport(const Options& opt) {
    tms::ToricVariety X = loadVariety(opt);
    if (opt.divisorF.empty() || opt.divisorG.empty())
        throw std::invalid_argument("report requires --F and --G");
    tms::Divisor F(parseCoeffs(opt.divisorF, X.rayCount(), "--F"));
    tms::Divisor G(parseCoeffs(opt.divisorG, X.rayCount(), "--G"));
    tms::EngineOptions eo = engineOptions(opt);
    tms::KRange range = kRange(opt, X.dim());

    int exit = kPass;
    std::vector<tms::CsvRow> rows;

    tms::IntersectionTable table = tms::intersectionTable(X, F, G, eo);
    for (int i = 0; i <= table.degree(); ++i) {
        tms::CsvRow row;
        row.variety = X.name();
        row.q = std::to_string(i);
        row.kind = "intersection";
        row.measured = table[i];
        row.bound = tms::Rat(table[i]);
        row.verdict = "INFO";
        rows.push_back(std::move(row));
    }

    exit = worst(exit, runVanishingScan(opt, &rows));

    tms::IntermediateOptions io;
    io.a = opt.a;
    io.diagonalDivisor = opt.c;
    if (opt.jMax >= 0) io.jMax = opt.jMax;
    for (int q : qValues(opt, X.dim())) {
        for (tms::BoundKind kind : {tms::BoundKind::Weak, tms::BoundKind::Strong,
                                   tms::BoundKind::IntermediateWeak,
                                   tms::BoundKind::IntermediateStrong}) {
            tms::VerificationReport report;
            if (kind == tms::BoundKind::Weak)
                report = tms::verifyWeak(X, F, G, q, range, eo);
            else if (kind == tms::BoundKind::Strong)
                report = tms::verifyStrong(X, F, G, q, range, eo);
            else
                report = tms::verifyIntermediate(X, F, G, q, kind, range, io, eo);
            exit = worst(exit, verdictExit(report.verdict));
            auto csv = tms::toCsvRows(report);
            rows.insert(rows.end(), csv.begin(), csv.end());
        }
    }

    auto checks = tms::subadditivityMatrix(X, opt.draws, opt.seed, eo);
    int index = 0;
    for (const auto& check : checks) {
        if (!check.holds) exit = worst(exit, kFail);
        rows.push_back(tms::toCsvRow(X.name(), check, index++));
    }

    if (opt.outPath.empty()) {
        tms::writeCsv(std::cout, rows);
    } else {
        maybeWriteCsv(opt, rows);
        std::cout << rows.size() << " rows -> " << opt.outPath << "\n";
    }
    std::cout << "overall: " << (exit == kPass ? "PASS" : exit == kFail ? "FAIL" : "INCONCLUSIVE")
              << "\n";
    return exit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology bounds for differences of ample divisors on toric varieties"};
    app.require_subcommand(1);

    Options opt;
    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", opt.builtin,
                        "built-in variety (P1..P4, P1xP1, P1xP1xP1, P1xP2, Hirzebruch)");
        cmd->add_option("--params", opt.params, "built-in parameters (Hirzebruch r)");
        cmd->add_option("--fan", opt.fanPath, "fan JSON file");
        cmd->add_option("--parallel", opt.parallel,
                        "worker threads (default: TORICMORSE_THREADS or 1)");
        cmd->add_option("--out", opt.outPath, "write CSV rows to this file");
    };

    CLI::App* cohomology = app.add_subcommand("cohomology", "print (h^0,...,h^n) of --D");
    addCommon(cohomology);
    cohomology->add_option("--D", opt.divisorD, "divisor coefficients, one per ray");

    CLI::App* intersect = app.add_subcommand("intersect", "print F^{n-i}.G^i for i=0..n");
    addCommon(intersect);
    intersect->add_option("--F", opt.divisorF, "divisor coefficients");
    intersect->add_option("--G", opt.divisorG, "divisor coefficients");

    auto addVerifyArgs = [&](CLI::App* cmd) {
        addCommon(cmd);
        cmd->add_option("--F", opt.divisorF, "ample divisor coefficients");
        cmd->add_option("--G", opt.divisorG, "ample divisor coefficients");
        cmd->add_option("--q", opt.qList, "cohomology degrees (default: all)");
        cmd->add_option("--kmin", opt.kMin, "window start (default 1)");
        cmd->add_option("--kmax", opt.kMax, "window end (default by dimension)");
    };

    CLI::App* weak = app.add_subcommand("verify-weak", "h^q(k(F-G)) against the weak bound");
    addVerifyArgs(weak);
    CLI::App* strong = app.add_subcommand("verify-strong", "chi_q(k(F-G)) against the strong bound");
    addVerifyArgs(strong);

    CLI::App* intermediate =
        app.add_subcommand("verify-intermediate", "h^q and chi_q of kF-jaG over the (k,j) grid");
    addVerifyArgs(intermediate);
    intermediate->add_option("--a", opt.a, "multiplier a >= 1 (default 1)");
    intermediate->add_option("--c", opt.c, "verdict diagonal j = floor(k/c) (default 1)");
    intermediate->add_option("--jmax", opt.jMax, "cap on j (default: j <= k)");

    CLI::App* subadd = app.add_subcommand("verify-subadditivity",
                                          "chi_q(B) <= chi_q(B-D_rho) + chi_q(B|D_rho)");
    addCommon(subadd);
    subadd->add_option("--D", opt.divisorD, "check this single divisor");
    subadd->add_option("--ray", opt.ray, "prime divisor ray index for the single check");
    subadd->add_option("--q", opt.qList, "degrees for the single check");
    subadd->add_option("--draws", opt.draws, "randomized draws (default 100)");
    subadd->add_option("--seed", opt.seed, "RNG seed for the randomized matrix");

    CLI::App* scan = app.add_subcommand("vanishing-scan",
                                        "least k0 with h^q(kF+aH)=0 for q>=1 on the whole grid");
    addCommon(scan);
    scan->add_option("--F", opt.divisorF, "ample divisor coefficients");
    scan->add_option("--H", opt.divisorH, "ample divisor coefficients");
    scan->add_option("--G", opt.divisorG, "alias for --H");
    scan->add_option("--kmax", opt.scanKMax, "scan bound for k (default 10)");
    scan->add_option("--amax", opt.aMax, "scan bound for a (default 5)");

    CLI::App* report = app.add_subcommand("report", "everything above as one CSV bundle");
    addVerifyArgs(report);
    report->add_option("--H", opt.divisorH, "ample divisor for the vanishing scan (default --G)");
    report->add_option("--a", opt.a, "intermediate multiplier (default 1)");
    report->add_option("--c", opt.c, "verdict diagonal divisor (default 1)");
    report->add_option("--jmax", opt.jMax, "intermediate j cap (default: j <= k)");
    report->add_option("--draws", opt.draws, "subadditivity draws (default 100)");
    report->add_option("--seed", opt.seed, "subadditivity RNG seed");
    report->add_option("--scan-kmax", opt.scanKMax, "vanishing scan k bound (default 10)");
    report->add_option("--amax", opt.aMax, "vanishing scan a bound (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (cohomology->parsed()) return runCohomology(opt);
        if (intersect->parsed()) return runIntersect(opt);
        if (weak->parsed()) return runVerify(opt, tms::BoundKind::Weak);
        if (strong->parsed()) return runVerify(opt, tms::BoundKind::Strong);
        if (intermediate->parsed()) return runVerifyIntermediate(opt);
        if (subadd->parsed()) return runSubadditivity(opt);
        if (scan->parsed()) return runVanishingScan(opt);
        if (report->parsed()) return runReport(opt);
    } catch (const tms::FanFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFormat;
    } catch (const tms::FanValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const tms::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const tms::RegionCertificationError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
