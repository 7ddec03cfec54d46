#pragma once

#include "toricmorse/numeric.hpp"

#include <vector>

namespace toricmorse {

/// The set {m : <m, normal_i> >= offset_i for all i}.
struct HalfSpaceSystem {
    CoordMatrix normals;  // one constraint per row
    CoordVector offsets;

    Index size() const { return normals.rows(); }
    Index dim() const { return normals.cols(); }
    bool contains(const CoordVector& point) const;
};

/// Axis-aligned integer box [lower, upper], both ends inclusive.
struct Box {
    CoordVector lower;
    CoordVector upper;

    Index dim() const { return lower.size(); }
    Int pointCount() const;
    bool contains(const CoordVector& point) const;
    Box inflated(Coord margin) const;
};

/// All integer points of `clip` satisfying `hs`, in lexicographic order.
std::vector<CoordVector> enumeratePoints(const HalfSpaceSystem& hs, const Box& clip);

/// Number of integer points of `clip` satisfying `hs` (no materialization).
Int countPoints(const HalfSpaceSystem& hs, const Box& clip);

/// Bounding box of all basic solutions of the hyperplane arrangement
/// {<m, normal_i> = offset_i}: one exact rational solve per maximal
/// independent row subset, rounded outward. Every bounded cell of the
/// arrangement (in particular every vertex of the feasible region and of
/// the all-reversed region) lies inside. Falls back to [-1,1]^n when the
/// rows span nothing.
Box arrangementVertexBox(const HalfSpaceSystem& hs);

}  // namespace toricmorse
