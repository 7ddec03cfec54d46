#pragma once

#include "toricmorse/variety.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricmorse {

/// All cohomology dimensions (h^0, ..., h^n) of one line bundle.
struct CohomologyProfile {
    std::vector<std::int64_t> dims;
    Divisor divisor;
    std::string variety;

    std::int64_t h(int q) const {
        return (q >= 0 && q < static_cast<int>(dims.size())) ? dims[q] : 0;
    }
};

/// Outcome of the shell certification that bounds the contributing region.
struct RegionCertificate {
    int expansions = 0;
    std::int64_t shellPoints = 0;
    int distinctPatterns = 0;
};

/// A box outside of which every lattice point contributes zero, together
/// with the certificate that established it.
struct SupportRegion {
    Box box;
    RegionCertificate certificate;
};

/// Raised when the support region cannot be certified within the expansion
/// budget; carries the last box tried.
class RegionCertificationError : public std::runtime_error {
  public:
    RegionCertificationError(std::string msg, Box lastBox)
        : std::runtime_error(std::move(msg)), lastBox(std::move(lastBox)) {}
    Box lastBox;
};

struct EngineOptions {
    int threads = 1;
    int maxExpansions = 32;
};

/// Certified region for the divisor's sign-pattern arrangement. Exposed
/// separately so callers can inspect the certificate.
SupportRegion supportRegion(const ToricVariety& X, const Divisor& D,
                            const EngineOptions& options = {});

/*
 * Exact cohomology of O_X(D): h^p is the number of lattice points m, weighted
 * by dim \tilde H^{p-1} of the full subcomplex on the rays with
 * <m, u_rho> < -a_rho, summed over a certified support region.
 */
CohomologyProfile cohomologyDims(const ToricVariety& X, const Divisor& D,
                                 const EngineOptions& options = {});

/// Alternating sum of cohomologyDims.
std::int64_t eulerChar(const ToricVariety& X, const Divisor& D,
                       const EngineOptions& options = {});

struct VanishingScanResult {
    std::optional<int> k0;  // least threshold within [1, kMax], if any
    int kMax = 0;
    int aMax = 0;
};

/// Least k0 <= kMax such that h^q(kF + aH) = 0 for all q >= 1, all
/// k in [k0, kMax] and all a in [0, aMax]. Requires F and H ample.
VanishingScanResult vanishingScan(const ToricVariety& X, const Divisor& F, const Divisor& H,
                                  int kMax, int aMax, const EngineOptions& options = {});

}  // namespace toricmorse
