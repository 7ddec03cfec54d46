#pragma once

#include "toricmorse/fan.hpp"

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace toricmorse {

using RayMask = std::uint64_t;

/*
 * Reduced simplicial cohomology (over the rationals) of full subcomplexes of
 * a fan's boundary complex: the vertex set is the rays, and a set of rays is
 * a face exactly when it spans a cone, i.e. is contained in some maximal
 * cone's ray set. Dimensions come from exact integer ranks of the augmented
 * coboundary matrices.
 *
 * The cache is a pure function table keyed by ray-subset bitmask; reads and
 * inserts are guarded by a shared mutex, so concurrent lookups are safe and
 * a value may at worst be computed twice (both computations agree).
 */
class RayComplexCache {
  public:
    explicit RayComplexCache(const Fan& fan);

    /// Dimensions of reduced cohomology of the full subcomplex on `mask`,
    /// indexed so that entry d holds dim \tilde H^{d-1}; length rank+1.
    /// Entry 0 is 1 exactly when the subset is empty.
    const std::vector<int>& reducedDims(RayMask mask) const;

    /// True when the subset is pinched between the open and closed
    /// hemisphere of some nonzero direction v: <v,u> <= 0 on the subset and
    /// <v,u> >= 0 off it. Such subsets are exactly the sign patterns that
    /// occur on unbounded cells of a divisor's hyperplane arrangement.
    bool isHemispherePattern(RayMask mask) const;

    const Fan& fan() const { return fan_; }

  private:
    std::vector<int> computeReducedDims(RayMask mask) const;
    bool computeHemispherePattern(RayMask mask) const;

    Fan fan_;
    std::vector<RayMask> coneMasks_;          // ray set of each maximal cone
    std::vector<IntVector> directionPool_;    // candidate pinch directions
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<RayMask, std::vector<int>> dims_;
    mutable std::unordered_map<RayMask, bool> hemisphere_;
};

/// One-shot wrapper over RayComplexCache for a subset given by indices.
std::vector<int> reducedCohomologyDims(const Fan& fan, const std::vector<int>& raySubset);

}  // namespace toricmorse
