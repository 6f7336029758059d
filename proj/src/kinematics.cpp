#include "relwave/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace relwave::kinematics {

namespace {

void require_subluminal(double v, const PhysicalConstants& k) {
    if (!(std::abs(v) < k.C))
        throw std::domain_error("frame velocity must satisfy |v| < C");
}

}  // namespace

double gamma_factor(double v, const PhysicalConstants& k) {
    require_subluminal(v, k);
    const double beta = v / k.C;
    // (1-b)(1+b) keeps precision as |v| -> C
    return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

double rapidity_of(double v, const PhysicalConstants& k) {
    require_subluminal(v, k);
    return std::atanh(v / k.C);
}

Boost Boost::from_velocity(double v, const PhysicalConstants& k) {
    return {v, gamma_factor(v, k), rapidity_of(v, k)};
}

Event lorentz_boost(const Event& ev, const Boost& b, const PhysicalConstants& k) {
    const double g = b.gamma;
    const double c2 = k.C * k.C;
    return {g * (ev.t - b.v * ev.x / c2), g * (ev.x - b.v * ev.t), ev.y, ev.z};
}

Event voigt_transform(const Event& ev, double v, const PhysicalConstants& k) {
    require_subluminal(v, k);
    const double c2 = k.C * k.C;
    return {ev.t - v * ev.x / c2, ev.x - v * ev.t, ev.y, ev.z};
}

Vec3 compose_velocities(const Vec3& u, double v, const PhysicalConstants& k) {
    if (u.norm() > k.C * (1.0 + 1e-12))
        throw std::domain_error("signal velocity must satisfy |u| <= C");
    require_subluminal(v, k);
    const double g = gamma_factor(v, k);
    const double d = 1.0 - u.x * v / (k.C * k.C);
    return {(u.x - v) / d, u.y / (g * d), u.z / (g * d)};
}

IntervalPair time_dilation_pair(double dt, double v, const PhysicalConstants& k) {
    if (!(dt > 0.0)) throw std::domain_error("duration must be positive");
    const double g = gamma_factor(v, k);
    return {g * dt, dt / g, dt};
}

LengthPair length_contraction_pair(double l, double v, const PhysicalConstants& k) {
    if (!(l > 0.0)) throw std::domain_error("length must be positive");
    const double g = gamma_factor(v, k);
    return {l / g, l / g, l};
}

PhaseSpeed simultaneity_phase_velocity(double v, const PhysicalConstants& k) {
    if (std::abs(v) > k.C)
        throw std::domain_error("frame velocity must satisfy |v| <= C");
    if (v == 0.0) return PhaseSpeed::unbounded();
    return PhaseSpeed::finite(k.C * k.C / v);
}

MuonPenetration muon_penetration(double tau0, double gamma, double depth,
                                 const PhysicalConstants& k, bool half_life) {
    if (!(tau0 > 0.0)) throw std::domain_error("lifetime must be positive");
    if (!(gamma >= 1.0)) throw std::domain_error("gamma must be >= 1");
    if (!(depth >= 0.0)) throw std::domain_error("depth must be non-negative");
    const double rest = tau0 * k.C;
    const double boosted = gamma * rest;
    const double fraction =
        half_life ? std::exp2(-depth / boosted) : std::exp(-depth / boosted);
    return {rest, boosted, fraction};
}

double invariant_interval(const Event& ev, const PhysicalConstants& k) {
    return k.C * k.C * ev.t * ev.t - ev.x * ev.x - ev.y * ev.y - ev.z * ev.z;
}

}  // namespace relwave::kinematics
