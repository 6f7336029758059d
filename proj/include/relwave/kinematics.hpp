#pragma once

#include "relwave/constants.hpp"
#include "relwave/vec3.hpp"

namespace relwave::kinematics {

/// A spacetime sample point. Coordinates are seconds and metres.
struct Event {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// A relative frame velocity along x with its derived gamma factor and
/// rapidity (tanh(rapidity) = v/C).
struct Boost {
    double v;
    double gamma;
    double rapidity;

    /// Throws std::domain_error unless |v| < C.
    static Boost from_velocity(double v, const PhysicalConstants& k);
};

/// Dilated/contracted durations around a proper duration. The product
/// dilated * contracted equals proper^2.
struct IntervalPair {
    double dilated;
    double contracted;
    double proper;
};

/// The two contracted lengths seen from a moving frame together with the
/// rest length; tilde_l * bar_l equals (rest/gamma)^2.
struct LengthPair {
    double tilde_l;
    double bar_l;
    double rest;
};

/// A signal speed that may be unbounded. The unbounded state is a tagged
/// sentinel, never a raw floating infinity; serializers write it as "inf".
struct PhaseSpeed {
    double value = 0.0;
    bool is_infinite = false;

    static PhaseSpeed finite(double v) { return {v, false}; }
    static PhaseSpeed unbounded() { return {0.0, true}; }
};

struct MuonPenetration {
    double rest_length;
    double boosted_length;
    double surviving_fraction;
};

/// 1/sqrt(1 - v^2/C^2). Throws std::domain_error for |v| >= C.
double gamma_factor(double v, const PhysicalConstants& k);

/// atanh(v/C). Throws std::domain_error for |v| >= C.
double rapidity_of(double v, const PhysicalConstants& k);

/// x' = gamma (x - v t), t' = gamma (t - v x / C^2); y, z unchanged.
/// Preserves the interval C^2 t^2 - x^2 - y^2 - z^2.
Event lorentz_boost(const Event& ev, const Boost& b, const PhysicalConstants& k);

/// The gamma-less substitution x' = x - v t, t' = t - v x / C^2.
/// Kept distinct from lorentz_boost; the boost is canonical downstream.
Event voigt_transform(const Event& ev, double v, const PhysicalConstants& k);

/// Relativistic velocity composition into a frame moving at v along x.
/// Transverse components carry the 1/gamma factor, so |u| = C maps to
/// |u'| = C and |u| <= C never composes past C.
Vec3 compose_velocities(const Vec3& u, double v, const PhysicalConstants& k);

/// dilated = gamma dt, contracted = dt/gamma. Throws for dt <= 0.
IntervalPair time_dilation_pair(double dt, double v, const PhysicalConstants& k);

/// tilde_l = bar_l = l/gamma. Throws for l <= 0.
LengthPair length_contraction_pair(double l, double v, const PhysicalConstants& k);

/// C^2/v, the speed at which the moving frame's surface of simultaneity
/// sweeps the rest frame. v = 0 yields the unbounded sentinel.
PhaseSpeed simultaneity_phase_velocity(double v, const PhysicalConstants& k);

/// Decay lengths and the fraction of muons surviving a slab of atmosphere.
/// tau0 is treated as a mean lifetime (survival exp(-depth/L)); half_life
/// switches to 2^(-depth/L).
MuonPenetration muon_penetration(double tau0, double gamma, double depth,
                                 const PhysicalConstants& k, bool half_life = false);

/// C^2 t^2 - x^2 - y^2 - z^2, in m^2.
double invariant_interval(const Event& ev, const PhysicalConstants& k);

}  // namespace relwave::kinematics
