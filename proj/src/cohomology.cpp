#include "toricmorse/cohomology.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace toricmorse {

namespace {

/// Sign-pattern evaluator: bit rho of the mask is set when
/// <m, u_rho> < -a_rho. Pairings are maintained incrementally along
/// lexicographic sweeps.
class PatternSweep {
  public:
    PatternSweep(const Fan& fan, const Divisor& D) : fan_(fan) {
        const int r = fan.rayCount();
        thresholds_.resize(r);
        for (int i = 0; i < r; ++i) thresholds_[i] = -D.coeffs[i];
    }

    RayMask maskAt(const CoordVector& m) const {
        RayMask mask = 0;
        for (int i = 0; i < fan_.rayCount(); ++i) {
            Coord pairing = 0;
            for (int j = 0; j < fan_.rank(); ++j) pairing += fan_.rays()(j, i) * m[j];
            if (pairing < thresholds_[i]) mask |= RayMask{1} << i;
        }
        return mask;
    }

    /// Visits every point of the box in lexicographic order; the callback
    /// receives the pattern mask. Pairings advance by one ray-column addition
    /// per step along the last coordinate.
    template <typename Visit>
    void sweep(const Box& box, Visit&& visit) const {
        const Index n = box.dim();
        const int r = fan_.rayCount();
        for (Index i = 0; i < n; ++i)
            if (box.upper[i] < box.lower[i]) return;
        CoordVector m = box.lower;
        std::vector<Coord> pairings(r);
        auto recompute = [&]() {
            for (int i = 0; i < r; ++i) {
                Coord p = 0;
                for (Index j = 0; j < n; ++j) p += fan_.rays()(j, i) * m[j];
                pairings[i] = p;
            }
        };
        recompute();
        while (true) {
            RayMask mask = 0;
            for (int i = 0; i < r; ++i)
                if (pairings[i] < thresholds_[i]) mask |= RayMask{1} << i;
            visit(mask);
            Index j = n - 1;
            while (j >= 0 && m[j] == box.upper[j]) {
                m[j] = box.lower[j];
                --j;
            }
            if (j < 0) return;
            ++m[j];
            if (j == n - 1) {
                for (int i = 0; i < r; ++i) pairings[i] += fan_.rays()(j, i);
            } else {
                recompute();
            }
        }
    }

  private:
    const Fan& fan_;
    std::vector<Coord> thresholds_;
};

/// Visits the boundary shell of the box (every point with at least one
/// coordinate at a bound). Faces overlap at edges; the callback must be
/// idempotent per point.
template <typename Visit>
void forEachShellPoint(const Box& box, Visit&& visit) {
    const Index n = box.dim();
    for (Index fixedAxis = 0; fixedAxis < n; ++fixedAxis) {
        for (int side = 0; side < 2; ++side) {
            Coord fixedValue = side == 0 ? box.lower[fixedAxis] : box.upper[fixedAxis];
            if (side == 1 && box.upper[fixedAxis] == box.lower[fixedAxis]) continue;
            // Iterate the remaining coordinates. Axes before fixedAxis skip
            // their own boundary values so each point is visited once.
            CoordVector m(n);
            std::vector<Coord> lo(n), hi(n);
            bool empty = false;
            for (Index j = 0; j < n; ++j) {
                if (j == fixedAxis) {
                    lo[j] = hi[j] = fixedValue;
                } else if (j < fixedAxis) {
                    lo[j] = box.lower[j] + 1;
                    hi[j] = box.upper[j] - 1;
                    if (lo[j] > hi[j]) empty = true;
                } else {
                    lo[j] = box.lower[j];
                    hi[j] = box.upper[j];
                }
                m[j] = lo[j];
            }
            if (empty) continue;
            while (true) {
                visit(m);
                Index j = n - 1;
                while (j >= 0 && m[j] == hi[j]) {
                    m[j] = lo[j];
                    --j;
                }
                if (j < 0) break;
                ++m[j];
            }
        }
    }
}

bool certifyShell(const ToricVariety& X, const Divisor& D, const Box& box,
                  RegionCertificate& cert) {
    RayComplexCache& cache = X.complexCache();
    PatternSweep sweep(X.fan(), D);
    std::set<RayMask> patterns;
    bool ok = true;
    std::int64_t count = 0;
    forEachShellPoint(box, [&](const CoordVector& m) {
        if (!ok) return;
        ++count;
        RayMask mask = sweep.maskAt(m);
        patterns.insert(mask);
        const std::vector<int>& dims = cache.reducedDims(mask);
        for (int d : dims)
            if (d != 0) { ok = false; return; }
        if (!cache.isHemispherePattern(mask)) ok = false;
    });
    cert.shellPoints = count;
    cert.distinctPatterns = static_cast<int>(patterns.size());
    return ok;
}

}  // namespace

SupportRegion supportRegion(const ToricVariety& X, const Divisor& D,
                            const EngineOptions& options) {
    HalfSpaceSystem hs = polytopeOf(X, D);
    Box box = arrangementVertexBox(hs);
    RegionCertificate cert;
    for (int round = 0; round <= options.maxExpansions; ++round) {
        cert.expansions = round;
        if (certifyShell(X, D, box, cert)) return SupportRegion{box, cert};
        // expand by half the current width (at least 2) on every side
        Coord growth = 2;
        for (Index j = 0; j < box.dim(); ++j)
            growth = std::max(growth, (box.upper[j] - box.lower[j]) / 2);
        box = box.inflated(growth);
    }
    throw RegionCertificationError(
        X.name() + ": support region not certified after " +
            std::to_string(options.maxExpansions) + " expansions",
        box);
}

CohomologyProfile cohomologyDims(const ToricVariety& X, const Divisor& D,
                                 const EngineOptions& options) {
    const int n = X.dim();
    SupportRegion region = supportRegion(X, D, options);
    RayComplexCache& cache = X.complexCache();

    const Box& box = region.box;
    const int threads = std::max(1, options.threads);
    std::vector<std::vector<std::int64_t>> partial(threads,
                                                   std::vector<std::int64_t>(n + 1, 0));

    // Slab partition along the first coordinate; exact integer sums make the
    // result independent of the partition.
    const Coord width = box.upper[0] - box.lower[0] + 1;
    const int used = static_cast<int>(std::min<Coord>(threads, width));
    auto work = [&](int t) {
        Box slab = box;
        slab.lower[0] = box.lower[0] + (width * t) / used;
        slab.upper[0] = box.lower[0] + (width * (t + 1)) / used - 1;
        if (slab.upper[0] < slab.lower[0]) return;
        PatternSweep sweep(X.fan(), D);
        auto& acc = partial[t];
        sweep.sweep(slab, [&](RayMask mask) {
            const std::vector<int>& dims = cache.reducedDims(mask);
            for (int p = 0; p <= n; ++p) acc[p] += dims[p];
        });
    };
    if (used == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (int t = 0; t < used; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    CohomologyProfile profile;
    profile.dims.assign(n + 1, 0);
    for (int t = 0; t < threads; ++t)
        for (int p = 0; p <= n; ++p) profile.dims[p] += partial[t][p];
    profile.divisor = D;
    profile.variety = X.name();
    return profile;
}

std::int64_t eulerChar(const ToricVariety& X, const Divisor& D, const EngineOptions& options) {
    CohomologyProfile profile = cohomologyDims(X, D, options);
    std::int64_t chi = 0;
    int sign = 1;
    for (std::size_t i = 0; i < profile.dims.size(); ++i) {
        chi += sign * profile.dims[i];
        sign = -sign;
    }
    return chi;
}

VanishingScanResult vanishingScan(const ToricVariety& X, const Divisor& F, const Divisor& H,
                                  int kMax, int aMax, const EngineOptions& options) {
    if (kMax < 1 || aMax < 0) throw std::invalid_argument("vanishingScan: bad scan bounds");
    if (!isAmple(X, F)) throw std::invalid_argument("vanishingScan: F is not ample");
    if (!isAmple(X, H)) throw std::invalid_argument("vanishingScan: H is not ample");

    VanishingScanResult result;
    result.kMax = kMax;
    result.aMax = aMax;
    // cleanFrom[k]: every a in [0, aMax] has all higher cohomology zero at k
    int lastDirty = 0;
    for (int k = 1; k <= kMax; ++k) {
        bool clean = true;
        for (int a = 0; a <= aMax && clean; ++a) {
            CohomologyProfile profile = cohomologyDims(X, F * k + H * a, options);
            for (std::size_t q = 1; q < profile.dims.size(); ++q)
                if (profile.dims[q] != 0) { clean = false; break; }
        }
        if (!clean) lastDirty = k;
    }
    if (lastDirty < kMax) result.k0 = lastDirty + 1;
    return result;
}

}  // namespace toricmorse
