#include "toricmorse/ray_complex.hpp"

#include "toricmorse/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace toricmorse {

RayComplexCache::RayComplexCache(const Fan& fan) : fan_(fan) {
    if (fan_.rayCount() > 63)
        throw FanValidationError("fans with more than 63 rays are not supported");
    for (const Cone& c : fan_.maxCones()) {
        RayMask m = 0;
        for (int idx : c.rayIndices) m |= RayMask{1} << idx;
        coneMasks_.push_back(m);
    }

    // Candidate directions for the hemisphere test: kernels of all
    // (n-1)-subsets of rays plus the coordinate axes. For a complete fan the
    // admissible cone of a pattern is pointed, so if it is nonzero one of
    // its extreme rays lies on n-1 independent ray hyperplanes and shows up
    // here (up to sign; both signs are tried).
    const int n = fan_.rank();
    const int r = fan_.rayCount();
    std::set<std::vector<Int>> seen;
    auto addDirection = [&](const IntVector& d) {
        IntVector dir = d;
        Int g = contentGcd(dir);
        if (g == 0) return;
        for (Index i = 0; i < dir.size(); ++i) dir[i] /= g;
        std::vector<Int> key(dir.data(), dir.data() + dir.size());
        if (seen.insert(key).second) directionPool_.push_back(dir);
    };
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e[i] = 1;
        addDirection(e);
        addDirection((-e).eval());
    }
    if (n >= 2) {
        std::vector<int> idx(n - 1);
        for (int i = 0; i < n - 1; ++i) idx[i] = i;
        while (true) {
            IntMatrix rows(n - 1, n);
            for (int k = 0; k < n - 1; ++k) rows.row(k) = widen(fan_.ray(idx[k])).transpose();
            if (auto d = crossKernel(rows)) {
                addDirection(*d);
                addDirection((-*d).eval());
            }
            int pos = n - 2;
            while (pos >= 0 && idx[pos] == r - (n - 1) + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int k = pos + 1; k < n - 1; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
}

const std::vector<int>& RayComplexCache::reducedDims(RayMask mask) const {
    {
        std::shared_lock lock(mutex_);
        auto it = dims_.find(mask);
        if (it != dims_.end()) return it->second;
    }
    std::vector<int> value = computeReducedDims(mask);
    std::unique_lock lock(mutex_);
    return dims_.emplace(mask, std::move(value)).first->second;
}

bool RayComplexCache::isHemispherePattern(RayMask mask) const {
    {
        std::shared_lock lock(mutex_);
        auto it = hemisphere_.find(mask);
        if (it != hemisphere_.end()) return it->second;
    }
    bool value = computeHemispherePattern(mask);
    std::unique_lock lock(mutex_);
    return hemisphere_.emplace(mask, value).first->second;
}

std::vector<int> RayComplexCache::computeReducedDims(RayMask mask) const {
    const int n = fan_.rank();
    std::vector<int> out(n + 1, 0);
    if (mask == 0) {
        out[0] = 1;  // empty complex: one class in degree -1
        return out;
    }

    // Faces by vertex count: subsets of (cone rays) ∩ mask, deduplicated.
    // facesBySize[s] holds the faces with s vertices; size 0 is the empty
    // face of the augmented complex.
    std::vector<std::set<RayMask>> facesBySize(n + 1);
    facesBySize[0].insert(0);
    for (RayMask coneMask : coneMasks_) {
        RayMask avail = coneMask & mask;
        // iterate all submasks of avail
        RayMask sub = avail;
        while (sub != 0) {
            facesBySize[std::popcount(sub)].insert(sub);
            sub = (sub - 1) & avail;
        }
    }

    // Coboundary rank from size s to size s+1. Entry (g, f) for f ⊂ g is
    // (-1)^{position of the extra vertex in g}.
    std::vector<Index> rankDelta(n + 1, 0);  // rankDelta[s]: C^{s} -> C^{s+1} (by vertex count)
    std::vector<std::vector<RayMask>> faces(n + 1);
    for (int s = 0; s <= n; ++s) faces[s].assign(facesBySize[s].begin(), facesBySize[s].end());

    for (int s = 0; s < n; ++s) {
        if (faces[s].empty() || faces[s + 1].empty()) continue;
        std::map<RayMask, Index> colOf;
        for (Index j = 0; j < static_cast<Index>(faces[s].size()); ++j) colOf[faces[s][j]] = j;
        IntMatrix delta = IntMatrix::Zero(static_cast<Index>(faces[s + 1].size()),
                                          static_cast<Index>(faces[s].size()));
        for (Index i = 0; i < static_cast<Index>(faces[s + 1].size()); ++i) {
            RayMask g = faces[s + 1][i];
            int pos = 0;
            for (RayMask bits = g; bits != 0;) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                RayMask f = g & ~(RayMask{1} << v);
                auto it = colOf.find(f);
                if (it != colOf.end()) delta(i, it->second) = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        rankDelta[s] = rankBareiss<Int>(delta);
    }

    // dim H~^{s-1} = #faces of size s - rank(delta_{s}) - rank(delta_{s-1})
    for (int s = 0; s <= n; ++s) {
        Index c = static_cast<Index>(faces[s].size());
        Index below = (s == 0) ? 0 : rankDelta[s - 1];
        Index here = (s == n) ? 0 : rankDelta[s];
        out[s] = static_cast<int>(c - here - below);
    }
    return out;
}

bool RayComplexCache::computeHemispherePattern(RayMask mask) const {
    const int r = fan_.rayCount();
    for (const IntVector& v : directionPool_) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            Int pairing = widen(fan_.ray(i)).dot(v);
            if (mask & (RayMask{1} << i)) {
                if (pairing > 0) ok = false;
            } else {
                if (pairing < 0) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<int> reducedCohomologyDims(const Fan& fan, const std::vector<int>& raySubset) {
    RayComplexCache cache(fan);
    RayMask mask = 0;
    for (int idx : raySubset) {
        if (idx < 0 || idx >= fan.rayCount())
            throw std::invalid_argument("ray index out of range");
        mask |= RayMask{1} << idx;
    }
    return cache.reducedDims(mask);
}

}  // namespace toricmorse
