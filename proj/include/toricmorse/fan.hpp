#pragma once

#include "toricmorse/numeric.hpp"

#include <string>
#include <vector>

namespace toricmorse {

/// Raised when a fan (or related structure) fails structural validation.
/// The message names the offending ray/cone.
class FanValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A maximal cone, stored as the sorted list of indices into the owning
/// fan's ray matrix.
struct Cone {
    std::vector<int> rayIndices;
};

/*
 * A rational simplicial fan: primitive ray generators (columns of an n x R
 * integer matrix) plus full-dimensional maximal cones. The constructor
 * enforces the structural invariants:
 *   - rays primitive, nonzero, pairwise distinct, entries within kMaxRayEntry
 *   - every maximal cone has exactly n distinct in-range rays with
 *     linearly independent generators
 *   - every ray appears in at least one maximal cone
 * Smoothness and completeness are separate predicates, not invariants.
 */
class Fan {
  public:
    Fan(int rank, CoordMatrix rays, std::vector<Cone> maxCones);

    int rank() const { return rank_; }
    int rayCount() const { return static_cast<int>(rays_.cols()); }
    const CoordMatrix& rays() const { return rays_; }
    CoordVector ray(int i) const { return rays_.col(i); }
    const std::vector<Cone>& maxCones() const { return maxCones_; }

    /// n x n matrix whose columns are the generators of the given cone.
    CoordMatrix coneGenerators(const Cone& c) const;

  private:
    int rank_;
    CoordMatrix rays_;  // rank x rayCount, one ray per column
    std::vector<Cone> maxCones_;
};

/// True iff every maximal cone's generator matrix has determinant +-1.
bool isSmooth(const Fan& fan);

/// True iff every facet (ray subset of size n-1 of a maximal cone) is shared
/// by exactly two maximal cones and the wall-adjacency graph is connected.
/// Valid for finite pure full-dimensional simplicial fans.
bool isComplete(const Fan& fan);

}  // namespace toricmorse
