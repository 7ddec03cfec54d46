#pragma once

#include "toricmorse/cohomology.hpp"
#include "toricmorse/intersection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricmorse {

enum class BoundKind { Weak, Strong, IntermediateWeak, IntermediateStrong };
enum class Verdict { Pass, Fail, Inconclusive };

std::string toString(BoundKind kind);
std::string toString(Verdict verdict);

/// Truncated alternating sum sum_{i=0}^q (-1)^{q-i} h^i. Entries beyond the
/// profile length count as zero (sheaves supported on subvarieties have no
/// cohomology above their dimension). q must be nonnegative.
std::int64_t chiTruncated(int q, const std::vector<std::int64_t>& dims);
std::int64_t chiTruncated(int q, const CohomologyProfile& profile);

/// Exact sum_{l=0}^{j-1} l^i.
Int powerSum(long j, int i);

/// n/(i+1) * C(n-1, i) == C(n, i+1), evaluated exactly; 0 <= i < n.
bool binomialIdentityHolds(int n, int i);

/// One asymptotic bound: measured(k) <= leadingCoefficient * k^n + o(k^n).
struct BoundSpec {
    int n = 0;
    int q = 0;
    BoundKind kind = BoundKind::Weak;
    Rat leadingCoefficient;
    std::string description;
};

/// Leading coefficient of the weak bound, F^{n-q}.G^q / ((n-q)! q!).
Rat weakCoefficient(const IntersectionTable& table, int q);

/// Leading coefficient of the strong bound,
/// (1/n!) sum_{i<=q} (-1)^{q-i} C(n,i) F^{n-i}.G^i.
Rat strongCoefficient(const IntersectionTable& table, int q);

struct BoundRow {
    int k = 0;
    std::optional<int> j;
    std::int64_t measured = 0;
    Rat bound;

    Rat margin() const { return bound - Rat(measured); }
};

struct FitResult {
    std::optional<Rat> leading;
    std::optional<int> period;
};

/*
 * Detects the smallest period p <= maxPeriod such that the samples, split by
 * residue class mod p, are eventually polynomial of degree <= n (exact
 * finite differences on the largest vanishing suffix, at least n+2 points
 * per class), with one common leading coefficient across classes. Sample
 * keys must be consecutive integers. Returns empty optionals when no period
 * fits; never guesses.
 */
FitResult fitLeading(const std::vector<std::pair<int, Int>>& samples, int n, int maxPeriod = 4);

/*
 * Pass policy for an asymptotic inequality, decided from the rows on the
 * policy diagonal: the fitted leading coefficient must not exceed the bound
 * coefficient (exact rational comparison), and either a strict threshold
 * k_strict exists inside the window (measured <= bound pointwise from there
 * on) or the normalized margins margin/k^n approach their limit
 * monotonically from some tail on, the limit being nonnegative. An
 * unfittable sequence yields Inconclusive, never Pass.
 */
struct VerificationReport {
    std::string variety;
    int q = 0;
    BoundKind kind = BoundKind::Weak;
    BoundSpec spec;
    std::vector<BoundRow> rows;       // every computed row (the full grid)
    std::vector<BoundRow> diagonal;   // rows the verdict policy is applied to
    std::optional<int> kStrict;
    FitResult fit;
    bool coincident = false;    // strong bound at q = 0 coincides with the weak one
    bool equalityFlag = false;  // q = n: |measured - bound| has degree <= n-1
    Verdict verdict = Verdict::Inconclusive;
};

struct KRange {
    int lo = 1;
    int hi = 1;
};

/// Default scan window by dimension: 24 for curves/surfaces, 14 for
/// threefolds, 8 beyond.
int defaultKMax(int dim);

/// h^q(X, k(F-G)) against the weak bound; F, G must be ample.
VerificationReport verifyWeak(const ToricVariety& X, const Divisor& F, const Divisor& G, int q,
                              const KRange& kRange, const EngineOptions& options = {});

/// chi_q(X, k(F-G)) against the strong bound; at q = n the report also
/// checks the two-sided o(k^n) bracket and sets equalityFlag.
VerificationReport verifyStrong(const ToricVariety& X, const Divisor& F, const Divisor& G, int q,
                                const KRange& kRange, const EngineOptions& options = {});

struct IntermediateOptions {
    int a = 1;                 // multiplier making aG very ample (any a >= 1 here)
    int diagonalDivisor = 1;   // c: the verdict diagonal is j = floor(k/c)
    std::optional<int> jMax;   // per-k cap; defaults to k
};

/// h^q (weak kind) or chi_q (strong kind) of kF - jaG over the (k, j) grid
/// against k^{n-q}(ja)^q- resp. k^{n-i}(ja)^i-scaled bounds; the verdict is
/// decided along the diagonal j = floor(k/c).
VerificationReport verifyIntermediate(const ToricVariety& X, const Divisor& F, const Divisor& G,
                                      int q, BoundKind kind, const KRange& kRange,
                                      const IntermediateOptions& io = {},
                                      const EngineOptions& options = {});

struct SubadditivityCheck {
    int ray = 0;
    int q = 0;
    std::int64_t chiTotal = 0;       // chi_q(X, B)
    std::int64_t chiSub = 0;         // chi_q(X, B - D_ray)
    std::int64_t chiRestriction = 0; // chi_q(D_ray, B|_{D_ray})
    bool holds = false;
};

/// chi_q(X,B) <= chi_q(X, B - D_rho) + chi_q(D_rho, B|_{D_rho}), exactly.
SubadditivityCheck verifySubadditivity(const ToricVariety& X, const Divisor& B, int rho, int q,
                                       const EngineOptions& options = {});

/// Randomized subadditivity matrix: `draws` checks with coefficients drawn
/// uniformly from [-5, 5], ray and q uniform. Deterministic given the seed.
std::vector<SubadditivityCheck> subadditivityMatrix(const ToricVariety& X, int draws,
                                                    unsigned long seed,
                                                    const EngineOptions& options = {});

}  // namespace toricmorse
