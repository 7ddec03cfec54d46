#include "toricmorse/variety.hpp"

#include "toricmorse/feasibility.hpp"
#include "toricmorse/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricmorse {

namespace {

void checkDivisor(const ToricVariety& X, const Divisor& D) {
    if (D.size() != X.rayCount())
        throw std::invalid_argument("divisor has " + std::to_string(D.size()) +
                                    " coefficients, fan has " + std::to_string(X.rayCount()) +
                                    " rays");
    for (Index i = 0; i < D.size(); ++i)
        if (D.coeffs[i] > kMaxDivisorCoeff || D.coeffs[i] < -kMaxDivisorCoeff)
            throw std::invalid_argument("divisor coefficient exceeds supported range");
}

/// Integer inverse of a unimodular matrix (exists since |det| = 1).
CoordMatrix unimodularInverse(const CoordMatrix& m) {
    const Index n = m.rows();
    IntMatrix wide = widen(m);
    IntMatrix inv(n, n);
    Int det = determinantBareiss<Int>(wide);
    if (det != 1 && det != -1) throw InternalError("unimodularInverse: determinant not +-1");
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (Index r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (Index c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = wide(r, c);
                }
                ++rr;
            }
            Int cof = determinantBareiss<Int>(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv(i, j) = cof / det;
        }
    }
    CoordMatrix out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out(i, j) = static_cast<Coord>(inv(i, j));
    return out;
}

/// Searches for an ample divisor with small coefficients. Divisor classes
/// are scanned through the transversal that has zero coefficients on the
/// rays of the first maximal cone (every class has such a representative on
/// a smooth fan), over L-infinity shells of growing radius.
std::optional<Divisor> scanForAmple(const ToricVariety& X, Coord maxCoeff, long budget) {
    const Fan& fan = X.fan();
    const int r = fan.rayCount();
    std::vector<int> freeRays;
    {
        std::set<int> inCone(fan.maxCones()[0].rayIndices.begin(),
                             fan.maxCones()[0].rayIndices.end());
        for (int i = 0; i < r; ++i)
            if (!inCone.count(i)) freeRays.push_back(i);
    }
    const int f = static_cast<int>(freeRays.size());
    if (f == 0) return std::nullopt;  // Picard rank 0 cannot happen for complete fans

    std::vector<Coord> v(f, 0);
    long tested = 0;
    for (Coord radius = 1; radius <= maxCoeff; ++radius) {
        // enumerate v with max |v_i| == radius
        std::fill(v.begin(), v.end(), -radius);
        while (true) {
            bool onShell = false;
            for (Coord c : v)
                if (c == radius || c == -radius) { onShell = true; break; }
            if (onShell) {
                if (++tested > budget) return std::nullopt;
                CoordVector coeffs = CoordVector::Zero(r);
                for (int i = 0; i < f; ++i) coeffs[freeRays[i]] = v[i];
                Divisor d(coeffs);
                if (isAmple(X, d)) return d;
            }
            int pos = f - 1;
            while (pos >= 0 && v[pos] == radius) {
                v[pos] = -radius;
                --pos;
            }
            if (pos < 0) break;
            ++v[pos];
        }
    }
    return std::nullopt;
}

/// Exact feasibility of a strictly convex support function, over the same
/// Picard transversal (coefficients on the first cone's rays pinned to 0).
bool strictlyConvexSupportExists(const Fan& fan) {
    const int n = fan.rank();
    const int r = fan.rayCount();
    std::vector<int> varOf(r, -1);
    std::vector<int> freeRays;
    {
        std::set<int> inCone(fan.maxCones()[0].rayIndices.begin(),
                             fan.maxCones()[0].rayIndices.end());
        for (int i = 0; i < r; ++i)
            if (!inCone.count(i)) {
                varOf[i] = static_cast<int>(freeRays.size());
                freeRays.push_back(i);
            }
    }
    const int f = static_cast<int>(freeRays.size());

    // m_sigma = -M_sigma^{-T} a_sigma depends linearly on the a's; with the
    // transversal pinned, each constraint <m_sigma, u_tau> + a_tau > 0
    // becomes an integer-coefficient strict inequality in the free a's.
    std::vector<LinearConstraint> constraints;
    for (const Cone& cone : fan.maxCones()) {
        // Row k of the inverse generator matrix is the dual covector w_k
        // with <w_k, u_{rho_j}> = delta_{kj}; m_sigma = -sum_k a_{rho_k} w_k.
        CoordMatrix inv = unimodularInverse(fan.coneGenerators(cone));
        for (int tau = 0; tau < r; ++tau) {
            if (std::find(cone.rayIndices.begin(), cone.rayIndices.end(), tau) !=
                cone.rayIndices.end())
                continue;
            LinearConstraint lc;
            lc.coeffs = RatVector::Zero(f);
            lc.rhs = 0;
            lc.strict = true;
            // <m_sigma, u_tau> + a_tau > 0
            for (int k = 0; k < n; ++k) {
                int rho = cone.rayIndices[k];
                Coord pairing = 0;  // <w_k, u_tau>
                for (int j = 0; j < n; ++j) pairing += inv(k, j) * fan.rays()(j, tau);
                if (varOf[rho] >= 0) lc.coeffs[varOf[rho]] -= Rat(pairing);
            }
            if (varOf[tau] >= 0) lc.coeffs[varOf[tau]] += 1;
            constraints.push_back(std::move(lc));
        }
    }
    return systemFeasible(std::move(constraints), f);
}

}  // namespace

ToricVariety::ToricVariety(std::string name, Fan fan) : name_(std::move(name)) {
    if (!isSmooth(fan)) throw FanValidationError(name_ + ": fan is not smooth");
    if (!isComplete(fan)) throw FanValidationError(name_ + ": fan is not complete");
    fan_ = std::make_shared<const Fan>(std::move(fan));
    cache_ = std::make_shared<RayComplexCache>(*fan_);
    ampleWitness_ = scanForAmple(*this, 10, 200'000);
    if (!ampleWitness_ && !strictlyConvexSupportExists(*fan_))
        throw FanValidationError(name_ + ": fan admits no ample divisor (not projective)");
}

Divisor ToricVariety::canonical() const {
    return Divisor(CoordVector::Constant(rayCount(), -1));
}

Divisor principalDivisor(const ToricVariety& X, const CoordVector& m) {
    const Fan& fan = X.fan();
    CoordVector coeffs(fan.rayCount());
    for (int i = 0; i < fan.rayCount(); ++i) {
        Coord pairing = 0;
        for (int j = 0; j < fan.rank(); ++j) pairing += m[j] * fan.rays()(j, i);
        coeffs[i] = pairing;
    }
    return Divisor(coeffs);
}

bool linearlyEquivalent(const ToricVariety& X, const Divisor& a, const Divisor& b) {
    checkDivisor(X, a);
    checkDivisor(X, b);
    // Solve <m, u_rho> = b_rho - a_rho on one maximal cone, then verify on
    // every other ray.
    const Fan& fan = X.fan();
    const Cone& cone = fan.maxCones()[0];
    IntMatrix sys(fan.rank(), fan.rank());
    IntVector rhs(fan.rank());
    for (int k = 0; k < fan.rank(); ++k) {
        int rho = cone.rayIndices[k];
        sys.row(k) = widen(fan.ray(rho)).transpose();
        rhs[k] = Int(b.coeffs[rho] - a.coeffs[rho]);
    }
    auto m = solveIntegral(sys, rhs);
    if (!m) return false;
    for (int i = 0; i < fan.rayCount(); ++i) {
        Int pairing = widen(fan.ray(i)).dot(*m);
        if (pairing != Int(b.coeffs[i] - a.coeffs[i])) return false;
    }
    return true;
}

CartierData cartierData(const ToricVariety& X, const Divisor& D) {
    checkDivisor(X, D);
    const Fan& fan = X.fan();
    CartierData data;
    data.conePoints.reserve(fan.maxCones().size());
    for (const Cone& cone : fan.maxCones()) {
        IntMatrix sys(fan.rank(), fan.rank());
        IntVector rhs(fan.rank());
        for (int k = 0; k < fan.rank(); ++k) {
            int rho = cone.rayIndices[k];
            sys.row(k) = widen(fan.ray(rho)).transpose();
            rhs[k] = Int(-D.coeffs[rho]);
        }
        auto m = solveIntegral(sys, rhs);
        if (!m) throw InternalError("cartierData: non-integral solution on a smooth cone");
        CoordVector point(fan.rank());
        for (int j = 0; j < fan.rank(); ++j) point[j] = static_cast<Coord>((*m)[j]);
        data.conePoints.push_back(std::move(point));
    }
    return data;
}

namespace {

bool positivityTest(const ToricVariety& X, const Divisor& D, bool strict) {
    checkDivisor(X, D);
    const Fan& fan = X.fan();
    CartierData data = cartierData(X, D);
    for (std::size_t c = 0; c < fan.maxCones().size(); ++c) {
        const Cone& cone = fan.maxCones()[c];
        for (int tau = 0; tau < fan.rayCount(); ++tau) {
            if (std::find(cone.rayIndices.begin(), cone.rayIndices.end(), tau) !=
                cone.rayIndices.end())
                continue;
            Coord pairing = 0;
            for (int j = 0; j < fan.rank(); ++j)
                pairing += data.conePoints[c][j] * fan.rays()(j, tau);
            Coord bound = -D.coeffs[tau];
            if (strict ? pairing <= bound : pairing < bound) return false;
        }
    }
    return true;
}

}  // namespace

bool isNef(const ToricVariety& X, const Divisor& D) { return positivityTest(X, D, false); }

bool isAmple(const ToricVariety& X, const Divisor& D) { return positivityTest(X, D, true); }

HalfSpaceSystem polytopeOf(const ToricVariety& X, const Divisor& D) {
    checkDivisor(X, D);
    const Fan& fan = X.fan();
    HalfSpaceSystem hs;
    hs.normals = fan.rays().transpose();
    hs.offsets = -D.coeffs;
    return hs;
}

PrimeRestriction restrictToPrime(const ToricVariety& X, const Divisor& D, int rho) {
    checkDivisor(X, D);
    const Fan& fan = X.fan();
    if (rho < 0 || rho >= fan.rayCount()) throw std::invalid_argument("ray index out of range");
    if (X.dim() < 2)
        throw std::invalid_argument("restriction to a prime divisor needs dim >= 2");
    const int n = fan.rank();

    // Normalize D within its class so the coefficient at rho becomes 0:
    // subtract div(chi^m) with <m, u_rho> = -a_rho. Since u_rho is primitive,
    // m = -a_rho * (first row of a unimodular completion) works.
    IntMatrix u = unimodularCompletion(widen(fan.ray(rho)));
    CoordVector mStar(n);
    for (int j = 0; j < n; ++j) {
        Int entry = Int(-D.coeffs[rho]) * u(0, j);
        mStar[j] = static_cast<Coord>(entry);
    }
    Divisor normalized = D + principalDivisor(X, mStar);
    if (normalized.coeffs[rho] != 0)
        throw InternalError("restrictToPrime: normalization failed");

    // Star fan: adjacent rays project to the quotient lattice N / Z u_rho
    // (rows 1..n-1 of U), cones through rho project to maximal cones.
    std::map<int, int> starIndexOf;  // fan ray index -> star ray index
    std::vector<int> sourceRays;
    std::vector<CoordVector> starRays;
    std::vector<Cone> starCones;
    for (const Cone& cone : fan.maxCones()) {
        if (std::find(cone.rayIndices.begin(), cone.rayIndices.end(), rho) ==
            cone.rayIndices.end())
            continue;
        Cone starCone;
        for (int tau : cone.rayIndices) {
            if (tau == rho) continue;
            auto it = starIndexOf.find(tau);
            if (it == starIndexOf.end()) {
                CoordVector image(n - 1);
                for (int j = 1; j < n; ++j) {
                    Int entry = 0;
                    for (int c = 0; c < n; ++c) entry += u(j, c) * Int(fan.rays()(c, tau));
                    image[j - 1] = static_cast<Coord>(entry);
                }
                it = starIndexOf.emplace(tau, static_cast<int>(starRays.size())).first;
                starRays.push_back(std::move(image));
                sourceRays.push_back(tau);
            }
            starCone.rayIndices.push_back(it->second);
        }
        starCones.push_back(std::move(starCone));
    }

    CoordMatrix rayMatrix(n - 1, static_cast<Index>(starRays.size()));
    for (std::size_t i = 0; i < starRays.size(); ++i) rayMatrix.col(static_cast<Index>(i)) = starRays[i];
    Fan starFan(n - 1, std::move(rayMatrix), std::move(starCones));
    ToricVariety starVariety(X.name() + "|D" + std::to_string(rho), std::move(starFan));

    CoordVector restricted(static_cast<Index>(sourceRays.size()));
    for (std::size_t i = 0; i < sourceRays.size(); ++i)
        restricted[static_cast<Index>(i)] = normalized.coeffs[sourceRays[i]];

    return PrimeRestriction{std::move(starVariety), Divisor(std::move(restricted)), rho,
                            std::move(sourceRays)};
}

namespace {

/// Product of complete fans: rays are the block-embedded factor rays, and
/// maximal cones are all combinations of factor maximal cones.
Fan productFan(const std::vector<Fan>& factors) {
    int rank = 0, rayTotal = 0;
    for (const Fan& f : factors) {
        rank += f.rank();
        rayTotal += f.rayCount();
    }
    CoordMatrix rays = CoordMatrix::Zero(rank, rayTotal);
    std::vector<int> rayOffset, rowOffset;
    {
        int ro = 0, co = 0;
        for (const Fan& f : factors) {
            rowOffset.push_back(ro);
            rayOffset.push_back(co);
            rays.block(ro, co, f.rank(), f.rayCount()) = f.rays();
            ro += f.rank();
            co += f.rayCount();
        }
    }
    std::vector<Cone> cones;
    std::vector<std::size_t> pick(factors.size(), 0);
    while (true) {
        Cone c;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (int idx : factors[i].maxCones()[pick[i]].rayIndices)
                c.rayIndices.push_back(idx + rayOffset[i]);
        }
        cones.push_back(std::move(c));
        int pos = static_cast<int>(factors.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == factors[pos].maxCones().size()) {
            pick[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++pick[pos];
    }
    return Fan(rank, std::move(rays), std::move(cones));
}

Fan projectiveSpaceFan(int n) {
    CoordMatrix rays(n, n + 1);
    rays.setZero();
    for (int i = 0; i < n; ++i) rays(i, i) = 1;
    for (int i = 0; i < n; ++i) rays(i, n) = -1;
    std::vector<Cone> cones;
    for (int skip = 0; skip <= n; ++skip) {
        Cone c;
        for (int i = 0; i <= n; ++i)
            if (i != skip) c.rayIndices.push_back(i);
        cones.push_back(std::move(c));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

Fan lineFan() {
    CoordMatrix rays(1, 2);
    rays(0, 0) = 1;
    rays(0, 1) = -1;
    return Fan(1, std::move(rays), {Cone{{0}}, Cone{{1}}});
}

}  // namespace

ToricVariety makeBuiltin(const std::string& name, const std::vector<Coord>& params) {
    for (int n = 1; n <= 4; ++n)
        if (name == "P" + std::to_string(n) || name == "P(" + std::to_string(n) + ")")
            return ToricVariety("P" + std::to_string(n), projectiveSpaceFan(n));
    if (name == "P1xP1") {
        CoordMatrix rays(2, 4);
        rays << 1, -1, 0, 0,
                0, 0, 1, -1;
        std::vector<Cone> cones = {Cone{{0, 2}}, Cone{{1, 2}}, Cone{{1, 3}}, Cone{{0, 3}}};
        return ToricVariety("P1xP1", Fan(2, std::move(rays), std::move(cones)));
    }
    if (name == "P1xP1xP1")
        return ToricVariety("P1xP1xP1", productFan({lineFan(), lineFan(), lineFan()}));
    if (name == "P1xP2")
        return ToricVariety("P1xP2", productFan({lineFan(), projectiveSpaceFan(2)}));
    if (name == "Hirzebruch" || name == "F") {
        if (params.empty()) throw std::invalid_argument("Hirzebruch requires a parameter r >= 0");
        Coord r = params[0];
        if (r < 0 || r > kMaxRayEntry) throw std::invalid_argument("Hirzebruch parameter out of range");
        CoordMatrix rays(2, 4);
        rays << 1, 0, -1, 0,
                0, 1, r, -1;
        std::vector<Cone> cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 3}}, Cone{{0, 3}}};
        return ToricVariety("Hirzebruch" + std::to_string(r), Fan(2, std::move(rays), std::move(cones)));
    }
    throw std::invalid_argument("unknown builtin variety: " + name);
}

}  // namespace toricmorse
