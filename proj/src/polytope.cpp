#include "toricmorse/polytope.hpp"

#include "toricmorse/linalg.hpp"

#include <algorithm>

namespace toricmorse {

bool HalfSpaceSystem::contains(const CoordVector& point) const {
    for (Index i = 0; i < size(); ++i) {
        Coord pairing = 0;
        for (Index j = 0; j < dim(); ++j) pairing += normals(i, j) * point[j];
        if (pairing < offsets[i]) return false;
    }
    return true;
}

Int Box::pointCount() const {
    Int count = 1;
    for (Index i = 0; i < dim(); ++i) {
        if (upper[i] < lower[i]) return 0;
        count *= Int(upper[i] - lower[i] + 1);
    }
    return count;
}

bool Box::contains(const CoordVector& point) const {
    for (Index i = 0; i < dim(); ++i)
        if (point[i] < lower[i] || point[i] > upper[i]) return false;
    return true;
}

Box Box::inflated(Coord margin) const {
    Box out = *this;
    out.lower.array() -= margin;
    out.upper.array() += margin;
    return out;
}

namespace {

template <typename Visit>
void forEachBoxPoint(const Box& clip, Visit&& visit) {
    const Index n = clip.dim();
    for (Index i = 0; i < n; ++i)
        if (clip.upper[i] < clip.lower[i]) return;
    CoordVector m = clip.lower;
    while (true) {
        visit(m);
        Index j = n - 1;
        while (j >= 0 && m[j] == clip.upper[j]) {
            m[j] = clip.lower[j];
            --j;
        }
        if (j < 0) return;
        ++m[j];
    }
}

}  // namespace

std::vector<CoordVector> enumeratePoints(const HalfSpaceSystem& hs, const Box& clip) {
    std::vector<CoordVector> out;
    forEachBoxPoint(clip, [&](const CoordVector& m) {
        if (hs.contains(m)) out.push_back(m);
    });
    return out;
}

Int countPoints(const HalfSpaceSystem& hs, const Box& clip) {
    Int count = 0;
    forEachBoxPoint(clip, [&](const CoordVector& m) {
        if (hs.contains(m)) ++count;
    });
    return count;
}

namespace {

Coord ratFloor(const Rat& v) {
    Int num = ratNumerator(v), den = ratDenominator(v);
    Int fl;
    if (num >= 0)
        fl = num / den;
    else
        fl = -Int((-num + den - 1) / den);
    return static_cast<Coord>(fl);
}

Coord ratCeil(const Rat& v) { return -ratFloor(-v); }

}  // namespace

Box arrangementVertexBox(const HalfSpaceSystem& hs) {
    const Index n = hs.dim();
    // Start from the origin so the box is never empty.
    Box box;
    box.lower = CoordVector::Zero(n);
    box.upper = CoordVector::Zero(n);

    if (hs.size() >= n) {
        std::vector<Index> idx(n);
        for (Index i = 0; i < n; ++i) idx[i] = i;
        while (true) {
            RatMatrix a(n, n);
            RatVector b(n);
            for (Index k = 0; k < n; ++k) {
                for (Index j = 0; j < n; ++j) a(k, j) = Rat(hs.normals(idx[k], j));
                b[k] = Rat(hs.offsets[idx[k]]);
            }
            if (auto x = solveRational(a, b)) {
                for (Index j = 0; j < n; ++j) {
                    box.lower[j] = std::min(box.lower[j], ratFloor((*x)[j]));
                    box.upper[j] = std::max(box.upper[j], ratCeil((*x)[j]));
                }
            }
            Index pos = n - 1;
            while (pos >= 0 && idx[pos] == hs.size() - n + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (Index k = pos + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    return box.inflated(1);
}

}  // namespace toricmorse
