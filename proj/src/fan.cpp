#include "toricmorse/fan.hpp"

#include "toricmorse/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toricmorse {

Fan::Fan(int rank, CoordMatrix rays, std::vector<Cone> maxCones)
    : rank_(rank), rays_(std::move(rays)), maxCones_(std::move(maxCones)) {
    if (rank_ < 1) throw FanValidationError("fan rank must be >= 1");
    if (rays_.rows() != rank_)
        throw FanValidationError("ray matrix has " + std::to_string(rays_.rows()) +
                                 " rows, expected rank " + std::to_string(rank_));
    const int r = rayCount();
    if (r == 0) throw FanValidationError("fan has no rays");

    for (int i = 0; i < r; ++i) {
        Int g = 0;
        for (int j = 0; j < rank_; ++j) {
            Coord e = rays_(j, i);
            if (e > kMaxRayEntry || e < -kMaxRayEntry)
                throw FanValidationError("ray " + std::to_string(i) + ": entry exceeds supported range");
            g = boost::multiprecision::gcd(g, Int(e));
        }
        if (g == 0) throw FanValidationError("ray " + std::to_string(i) + ": zero vector");
        if (g != 1)
            throw FanValidationError("ray " + std::to_string(i) + ": not primitive (gcd " + g.str() + ")");
        for (int k = 0; k < i; ++k)
            if (rays_.col(k) == rays_.col(i))
                throw FanValidationError("ray " + std::to_string(i) + " duplicates ray " + std::to_string(k));
    }

    if (maxCones_.empty()) throw FanValidationError("fan has no maximal cones");
    std::vector<bool> covered(r, false);
    for (std::size_t c = 0; c < maxCones_.size(); ++c) {
        Cone& cone = maxCones_[c];
        if (static_cast<int>(cone.rayIndices.size()) != rank_)
            throw FanValidationError("cone " + std::to_string(c) + ": has " +
                                     std::to_string(cone.rayIndices.size()) + " rays, expected " +
                                     std::to_string(rank_));
        std::sort(cone.rayIndices.begin(), cone.rayIndices.end());
        for (std::size_t k = 0; k < cone.rayIndices.size(); ++k) {
            int idx = cone.rayIndices[k];
            if (idx < 0 || idx >= r)
                throw FanValidationError("cone " + std::to_string(c) + ": ray index " +
                                         std::to_string(idx) + " out of range");
            if (k > 0 && cone.rayIndices[k - 1] == idx)
                throw FanValidationError("cone " + std::to_string(c) + ": repeated ray index " +
                                         std::to_string(idx));
            covered[idx] = true;
        }
        if (determinantBareiss<Int>(widen(coneGenerators(cone))) == 0)
            throw FanValidationError("cone " + std::to_string(c) + ": generators are linearly dependent");
    }
    for (int i = 0; i < r; ++i)
        if (!covered[i])
            throw FanValidationError("ray " + std::to_string(i) + " belongs to no maximal cone");
}

CoordMatrix Fan::coneGenerators(const Cone& c) const {
    CoordMatrix m(rank_, rank_);
    for (int k = 0; k < rank_; ++k) m.col(k) = rays_.col(c.rayIndices[k]);
    return m;
}

bool isSmooth(const Fan& fan) {
    for (const Cone& c : fan.maxCones()) {
        Int d = determinantBareiss<Int>(widen(fan.coneGenerators(c)));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

bool isComplete(const Fan& fan) {
    // Walls keyed by their sorted ray subset of size n-1; each must bound
    // exactly two maximal cones.
    std::map<std::vector<int>, std::vector<int>> walls;
    const auto& cones = fan.maxCones();
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const auto& idx = cones[c].rayIndices;
        for (std::size_t skip = 0; skip < idx.size(); ++skip) {
            std::vector<int> wall;
            wall.reserve(idx.size() - 1);
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != skip) wall.push_back(idx[k]);
            walls[wall].push_back(static_cast<int>(c));
        }
    }
    for (const auto& [wall, incident] : walls)
        if (incident.size() != 2) return false;

    // Connectivity of the wall-adjacency graph.
    const std::size_t m = cones.size();
    std::vector<std::vector<int>> adjacency(m);
    for (const auto& [wall, incident] : walls) {
        adjacency[incident[0]].push_back(incident[1]);
        adjacency[incident[1]].push_back(incident[0]);
    }
    std::vector<bool> seen(m, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int next : adjacency[c]) {
            if (seen[next]) continue;
            seen[next] = true;
            ++visited;
            stack.push_back(next);
        }
    }
    return visited == m;
}

}  // namespace toricmorse
