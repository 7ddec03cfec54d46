#pragma once

#include "toricmorse/fan.hpp"
#include "toricmorse/polytope.hpp"
#include "toricmorse/ray_complex.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toricmorse {

/// A torus-invariant divisor: one integer coefficient per fan ray.
struct Divisor {
    CoordVector coeffs;

    Divisor() = default;
    explicit Divisor(CoordVector c) : coeffs(std::move(c)) {}

    Index size() const { return coeffs.size(); }

    Divisor operator+(const Divisor& other) const { return Divisor(coeffs + other.coeffs); }
    Divisor operator-(const Divisor& other) const { return Divisor(coeffs - other.coeffs); }
    Divisor operator*(Coord k) const { return Divisor((coeffs.array() * k).matrix().eval()); }
    bool operator==(const Divisor& other) const { return coeffs == other.coeffs; }
};

inline Divisor operator*(Coord k, const Divisor& d) { return d * k; }

/*
 * A smooth complete projective toric variety, carried by its fan. The
 * constructor certifies all three properties and throws FanValidationError
 * otherwise; projectivity is certified by exhibiting an ample divisor (small
 * coefficient scan over a Picard transversal) or, failing that, by an exact
 * rational feasibility check for a strictly convex support function.
 *
 * Instances are immutable and cheap to copy (the fan and the subcomplex
 * cohomology cache are shared).
 */
class ToricVariety {
  public:
    ToricVariety(std::string name, Fan fan);

    const std::string& name() const { return name_; }
    const Fan& fan() const { return *fan_; }
    int dim() const { return fan_->rank(); }
    int rayCount() const { return fan_->rayCount(); }
    RayComplexCache& complexCache() const { return *cache_; }

    /// The divisor with every coefficient -1 (the canonical class).
    Divisor canonical() const;

    /// An ample divisor found during certification, when the scan produced
    /// a concrete witness (it does for every built-in variety).
    const std::optional<Divisor>& ampleWitness() const { return ampleWitness_; }

    Divisor zeroDivisor() const { return Divisor(CoordVector::Zero(rayCount())); }

  private:
    std::string name_;
    std::shared_ptr<const Fan> fan_;
    std::shared_ptr<RayComplexCache> cache_;
    std::optional<Divisor> ampleWitness_;
};

/// Local data of the support function of a divisor: for each maximal cone
/// sigma the unique integer vector with <m_sigma, u_rho> = -a_rho on sigma's
/// rays (unique and integral because the fan is smooth).
struct CartierData {
    std::vector<CoordVector> conePoints;  // parallel to fan().maxCones()
};

/// The invariant prime divisor D_rho as a toric variety (the star fan in the
/// quotient lattice), together with the restriction of a divisor to it.
struct PrimeRestriction {
    ToricVariety variety;
    Divisor divisor;
    int sourceRay;
    std::vector<int> sourceRaysOfStarRays;  // star ray i comes from this fan ray
};

/// The divisor of the character m: coefficient <m, u_rho> at each ray.
Divisor principalDivisor(const ToricVariety& X, const CoordVector& m);

/// Exact test for linear equivalence (difference is a principal divisor).
bool linearlyEquivalent(const ToricVariety& X, const Divisor& a, const Divisor& b);

CartierData cartierData(const ToricVariety& X, const Divisor& D);

/// Convexity of the support function: <m_sigma, u_rho> >= -a_rho for every
/// maximal cone sigma and ray rho outside sigma (strict for ample). On a
/// smooth complete toric variety ample implies very ample.
bool isNef(const ToricVariety& X, const Divisor& D);
bool isAmple(const ToricVariety& X, const Divisor& D);

/// The system <m, u_rho> >= -a_rho over all rays, whose lattice points are
/// the weights of global sections.
HalfSpaceSystem polytopeOf(const ToricVariety& X, const Divisor& D);

/// Star-fan restriction of D to the invariant prime divisor of ray `rho`:
/// D is first moved within its class so the coefficient at rho vanishes,
/// then coefficients at adjacent rays are read off in the quotient lattice.
PrimeRestriction restrictToPrime(const ToricVariety& X, const Divisor& D, int rho);

/// Catalog of standard varieties: P1..P4, P1xP1, P1xP1xP1, P1xP2, and
/// Hirzebruch(r). `params` carries r for the Hirzebruch surfaces.
ToricVariety makeBuiltin(const std::string& name, const std::vector<Coord>& params = {});

}  // namespace toricmorse
