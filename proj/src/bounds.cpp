#include "toricmorse/bounds.hpp"

#include <algorithm>
#include <random>

namespace toricmorse {

std::string toString(BoundKind kind) {
    switch (kind) {
        case BoundKind::Weak: return "weak";
        case BoundKind::Strong: return "strong";
        case BoundKind::IntermediateWeak: return "intermediate-weak";
        case BoundKind::IntermediateStrong: return "intermediate-strong";
    }
    return "?";
}

std::string toString(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::int64_t chiTruncated(int q, const std::vector<std::int64_t>& dims) {
    if (q < 0) throw std::out_of_range("chiTruncated: q must be nonnegative");
    std::int64_t sum = 0;
    int sign = (q % 2 == 0) ? 1 : -1;  // (-1)^{q-i} starting at i = 0
    for (int i = 0; i <= q; ++i) {
        if (i < static_cast<int>(dims.size())) sum += sign * dims[i];
        sign = -sign;
    }
    return sum;
}

std::int64_t chiTruncated(int q, const CohomologyProfile& profile) {
    return chiTruncated(q, profile.dims);
}

Int powerSum(long j, int i) {
    if (j < 0 || i < 0) throw std::invalid_argument("powerSum: arguments must be nonnegative");
    Int sum = 0;
    for (long l = 0; l < j; ++l) sum += intPow(Int(l), i);
    return sum;
}

bool binomialIdentityHolds(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("binomialIdentityHolds: need 0 <= i < n");
    return Rat(n, i + 1) * Rat(binomial(n - 1, i)) == Rat(binomial(n, i + 1));
}

Rat weakCoefficient(const IntersectionTable& table, int q) {
    const int n = table.degree();
    return Rat(table[q]) / Rat(factorial(n - q) * factorial(q));
}

Rat strongCoefficient(const IntersectionTable& table, int q) {
    const int n = table.degree();
    Rat sum = 0;
    for (int i = 0; i <= q; ++i) {
        Rat term = Rat(binomial(n, i) * table[i]);
        sum += ((q - i) % 2 == 0) ? term : -term;
    }
    return sum / Rat(factorial(n));
}

int defaultKMax(int dim) {
    if (dim <= 2) return 24;
    if (dim == 3) return 14;
    return 8;
}

namespace {

/// Largest suffix of `values` on which all d-th finite differences vanish.
/// Returns the number of trailing points with certified degree < d, or 0
/// when even the last d+1 points fail.
template <typename Scalar>
std::size_t vanishingSuffix(const std::vector<Scalar>& values, int d) {
    if (static_cast<int>(values.size()) < d + 1) return 0;
    std::vector<Scalar> diffs = values;
    for (int step = 0; step < d; ++step)
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.resize(values.size() - d);
    std::size_t firstZero = diffs.size();
    while (firstZero > 0 && diffs[firstZero - 1] == Scalar(0)) --firstZero;
    // points k with index >= firstZero participate only in vanishing diffs
    return values.size() - firstZero;
}

/// Constant value of the d-th finite differences over the tail (assumes the
/// (d+1)-th differences vanish there).
template <typename Scalar>
Scalar tailDifference(const std::vector<Scalar>& values, int d) {
    std::vector<Scalar> diffs = values;
    for (int step = 0; step < d; ++step)
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    return diffs[values.size() - d - 1];
}

}  // namespace

FitResult fitLeading(const std::vector<std::pair<int, Int>>& samples, int n, int maxPeriod) {
    FitResult result;
    if (samples.empty() || n < 0) return result;
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first != samples[i - 1].first + 1)
            throw std::invalid_argument("fitLeading: sample keys must be consecutive");

    for (int p = 1; p <= maxPeriod; ++p) {
        if (static_cast<int>(samples.size()) < (n + 1) * p) break;
        bool fits = true;
        std::optional<Rat> common;
        for (int r = 0; r < p && fits; ++r) {
            std::vector<Int> values;
            for (std::size_t i = r; i < samples.size(); i += p) values.push_back(samples[i].second);
            if (static_cast<int>(values.size()) < n + 2) { fits = false; break; }
            std::size_t tail = vanishingSuffix(values, n + 1);
            if (static_cast<int>(tail) < n + 2) { fits = false; break; }
            std::vector<Int> window(values.end() - tail, values.end());
            // leading coefficient in k: Delta^n / (n! p^n) on the residue class
            Rat lead = Rat(tailDifference(window, n)) / Rat(factorial(n) * intPow(Int(p), n));
            if (!common)
                common = lead;
            else if (*common != lead)
                fits = false;
        }
        if (fits && common) {
            result.leading = *common;
            result.period = p;
            return result;
        }
    }
    return result;
}

namespace {

std::optional<int> strictThreshold(const std::vector<BoundRow>& rows) {
    // least k such that every row from it on satisfies measured <= bound
    std::optional<int> threshold;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (Rat(it->measured) <= it->bound)
            threshold = it->k;
        else
            break;
    }
    return threshold;
}

/// Margins of quasi-polynomial data are themselves quasi-polynomial, so the
/// approach to the limit is monotone along each residue class of the fitted
/// period, not along the interleaved sequence.
bool marginsShrinkMonotonically(const std::vector<BoundRow>& rows, int n, const Rat& limit,
                                int period) {
    if (rows.size() < 2) return false;
    for (int r = 0; r < period; ++r) {
        std::vector<Rat> deviations;
        for (const BoundRow& row : rows) {
            if ((row.k % period + period) % period != r) continue;
            Rat normalized = row.margin() / Rat(intPow(Int(row.k), n));
            deviations.push_back(boost::multiprecision::abs(normalized - limit));
        }
        if (deviations.size() < 2) continue;
        std::size_t tail = std::max<std::size_t>(3, deviations.size() / 3);
        tail = std::min(tail, deviations.size());
        for (std::size_t i = deviations.size() - tail + 1; i < deviations.size(); ++i)
            if (deviations[i] > deviations[i - 1]) return false;
    }
    return true;
}

Verdict decidePolicy(VerificationReport& report) {
    const int n = report.spec.n;
    std::vector<std::pair<int, Int>> samples;
    samples.reserve(report.diagonal.size());
    for (const BoundRow& row : report.diagonal) samples.emplace_back(row.k, Int(row.measured));
    report.fit = fitLeading(samples, n);
    report.kStrict = strictThreshold(report.diagonal);
    if (!report.fit.leading) return Verdict::Inconclusive;

    // bound coefficient along the diagonal
    Rat diagonalLead = report.spec.leadingCoefficient;
    if (*report.fit.leading > diagonalLead) return Verdict::Fail;
    if (report.kStrict) return Verdict::Pass;
    Rat limit = diagonalLead - *report.fit.leading;
    return marginsShrinkMonotonically(report.diagonal, n, limit, *report.fit.period)
               ? Verdict::Pass
               : Verdict::Fail;
}

void requireAmplePair(const ToricVariety& X, const Divisor& F, const Divisor& G) {
    if (!isAmple(X, F)) throw std::invalid_argument(X.name() + ": F is not ample");
    if (!isAmple(X, G)) throw std::invalid_argument(X.name() + ": G is not ample");
}

/// Shared driver for the weak/strong bounds on L = F - G.
VerificationReport verifyDifference(const ToricVariety& X, const Divisor& F, const Divisor& G,
                                    int q, BoundKind kind, const KRange& kRange,
                                    const EngineOptions& options) {
    requireAmplePair(X, F, G);
    const int n = X.dim();
    if (q < 0 || q > n) throw std::out_of_range("q out of range");
    if (kRange.lo < 1 || kRange.hi < kRange.lo) throw std::invalid_argument("bad k range");

    IntersectionTable table = intersectionTable(X, F, G, options);
    VerificationReport report;
    report.variety = X.name();
    report.q = q;
    report.kind = kind;
    report.spec.n = n;
    report.spec.q = q;
    report.spec.kind = kind;
    if (kind == BoundKind::Weak) {
        report.spec.leadingCoefficient = weakCoefficient(table, q);
        report.spec.description = "h^q(k(F-G)) <= k^n F^{n-q}.G^q/((n-q)! q!) + o(k^n)";
    } else {
        report.spec.leadingCoefficient = strongCoefficient(table, q);
        report.spec.description =
            "chi_q(k(F-G)) <= (k^n/n!) sum (-1)^{q-i} C(n,i) F^{n-i}.G^i + o(k^n)";
        report.coincident = (q == 0);
    }

    Divisor L = F - G;
    for (int k = kRange.lo; k <= kRange.hi; ++k) {
        CohomologyProfile profile = cohomologyDims(X, L * k, options);
        BoundRow row;
        row.k = k;
        row.measured = (kind == BoundKind::Weak) ? profile.h(q) : chiTruncated(q, profile);
        row.bound = report.spec.leadingCoefficient * Rat(intPow(Int(k), n));
        report.rows.push_back(row);
    }
    report.diagonal = report.rows;
    report.verdict = decidePolicy(report);

    if (kind == BoundKind::Strong && q == n) {
        // Two-sided bracket at q = n: measured - bound must have degree
        // <= n-1 (it is an exact polynomial in k, so plain differences on
        // the largest vanishing suffix decide this).
        std::vector<Rat> difference;
        difference.reserve(report.rows.size());
        for (const BoundRow& row : report.rows) difference.push_back(Rat(row.measured) - row.bound);
        report.equalityFlag = vanishingSuffix(difference, n) >= static_cast<std::size_t>(n + 1);
        if (!report.equalityFlag && report.verdict == Verdict::Pass) report.verdict = Verdict::Fail;
    }
    return report;
}

}  // namespace

VerificationReport verifyWeak(const ToricVariety& X, const Divisor& F, const Divisor& G, int q,
                              const KRange& kRange, const EngineOptions& options) {
    return verifyDifference(X, F, G, q, BoundKind::Weak, kRange, options);
}

VerificationReport verifyStrong(const ToricVariety& X, const Divisor& F, const Divisor& G, int q,
                                const KRange& kRange, const EngineOptions& options) {
    return verifyDifference(X, F, G, q, BoundKind::Strong, kRange, options);
}

VerificationReport verifyIntermediate(const ToricVariety& X, const Divisor& F, const Divisor& G,
                                      int q, BoundKind kind, const KRange& kRange,
                                      const IntermediateOptions& io, const EngineOptions& options) {
    if (kind != BoundKind::IntermediateWeak && kind != BoundKind::IntermediateStrong)
        throw std::invalid_argument("verifyIntermediate: kind must be intermediate");
    requireAmplePair(X, F, G);
    if (io.a < 1) throw std::invalid_argument("verifyIntermediate: a must be >= 1");
    if (io.diagonalDivisor < 1) throw std::invalid_argument("verifyIntermediate: c must be >= 1");
    const int n = X.dim();
    if (q < 0 || q > n) throw std::out_of_range("q out of range");
    if (kRange.lo < 1 || kRange.hi < kRange.lo) throw std::invalid_argument("bad k range");

    IntersectionTable table = intersectionTable(X, F, G, options);
    const int a = io.a;
    const int c = io.diagonalDivisor;

    VerificationReport report;
    report.variety = X.name();
    report.q = q;
    report.kind = kind;
    report.spec.n = n;
    report.spec.q = q;
    report.spec.kind = kind;

    auto boundAt = [&](int k, int j) -> Rat {
        Int ja = Int(j) * a;
        if (kind == BoundKind::IntermediateWeak)
            return weakCoefficient(table, q) * Rat(intPow(Int(k), n - q) * intPow(ja, q));
        Rat sum = 0;
        for (int i = 0; i <= q; ++i) {
            Rat term = Rat(binomial(n, i) * table[i] * intPow(Int(k), n - i) * intPow(ja, i));
            sum += ((q - i) % 2 == 0) ? term : -term;
        }
        return sum / Rat(factorial(n));
    };
    // leading coefficient along the diagonal j = floor(k/c), identical on
    // every residue class of k mod c
    {
        Rat ac = Rat(a) / Rat(c);
        if (kind == BoundKind::IntermediateWeak) {
            report.spec.leadingCoefficient = weakCoefficient(table, q) * ratPow(ac, q);
            report.spec.description =
                "h^q(kF - jaG) <= k^{n-q}(ja)^q F^{n-q}.G^q/((n-q)! q!) + o(k^{n-q})o(j^q)";
        } else {
            Rat sum = 0;
            for (int i = 0; i <= q; ++i) {
                Rat term = Rat(binomial(n, i) * table[i]) * ratPow(ac, i);
                sum += ((q - i) % 2 == 0) ? term : -term;
            }
            report.spec.leadingCoefficient = sum / Rat(factorial(n));
            report.spec.description =
                "chi_q(kF - jaG) <= (1/n!) sum (-1)^{q-i} C(n,i) k^{n-i}(ja)^i F^{n-i}.G^i + o(.)";
        }
    }

    for (int k = kRange.lo; k <= kRange.hi; ++k) {
        int jHi = io.jMax ? std::min(*io.jMax, k) : k;
        int jDiag = k / c;
        for (int j = 0; j <= jHi; ++j) {
            CohomologyProfile profile = cohomologyDims(X, F * k - G * (j * a), options);
            BoundRow row;
            row.k = k;
            row.j = j;
            row.measured = (kind == BoundKind::IntermediateWeak) ? profile.h(q)
                                                                 : chiTruncated(q, profile);
            row.bound = boundAt(k, j);
            report.rows.push_back(row);
            if (j == jDiag) report.diagonal.push_back(row);
        }
    }
    report.verdict = decidePolicy(report);
    return report;
}

SubadditivityCheck verifySubadditivity(const ToricVariety& X, const Divisor& B, int rho, int q,
                                       const EngineOptions& options) {
    if (rho < 0 || rho >= X.rayCount()) throw std::invalid_argument("ray index out of range");
    if (q < 0 || q > X.dim()) throw std::out_of_range("q out of range");

    CoordVector primeCoeffs = CoordVector::Zero(X.rayCount());
    primeCoeffs[rho] = 1;
    Divisor prime(primeCoeffs);

    SubadditivityCheck check;
    check.ray = rho;
    check.q = q;
    check.chiTotal = chiTruncated(q, cohomologyDims(X, B, options));
    check.chiSub = chiTruncated(q, cohomologyDims(X, B - prime, options));
    PrimeRestriction restriction = restrictToPrime(X, B, rho);
    check.chiRestriction =
        chiTruncated(q, cohomologyDims(restriction.variety, restriction.divisor, options));
    check.holds = check.chiTotal <= check.chiSub + check.chiRestriction;
    return check;
}

std::vector<SubadditivityCheck> subadditivityMatrix(const ToricVariety& X, int draws,
                                                    unsigned long seed,
                                                    const EngineOptions& options) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> rayPick(0, X.rayCount() - 1);
    std::uniform_int_distribution<int> qPick(0, X.dim());
    std::vector<SubadditivityCheck> out;
    out.reserve(draws);
    for (int d = 0; d < draws; ++d) {
        CoordVector coeffs(X.rayCount());
        for (Index i = 0; i < coeffs.size(); ++i) coeffs[i] = coeff(rng);
        int rho = rayPick(rng);
        int q = qPick(rng);
        out.push_back(verifySubadditivity(X, Divisor(coeffs), rho, q, options));
    }
    return out;
}

}  // namespace toricmorse
