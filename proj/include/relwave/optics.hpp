#pragma once

#include <string>
#include <vector>

#include "relwave/constants.hpp"

namespace relwave::optics {

/// Linear dielectric/magnetic medium with its refractive index.
struct Medium {
    double epsilon = 1.0;
    double mu = 1.0;
    double n = 1.0;

    static Medium from_epsilon_mu(double epsilon, double mu);
    static Medium from_index(double n, double mu = 1.0);
    static Medium vacuum() { return {1.0, 1.0, 1.0}; }

    /// epsilon, mu > 0 and n = sqrt(epsilon mu) within 1e-12 relative.
    void validate() const;
};

/// Lorentz-oscillator resonance parameters for the dispersion sum.
struct ResonanceParams {
    double oscillator_density = 0.0;  ///< n(q), per m^3 (applied to each mode)
    double omega_c = 0.0;             ///< resonance frequency, rad/s
    double m_osc = 0.0;               ///< oscillator mass, kg
    double tau_damp = 0.0;            ///< damping time constant, s

    void validate() const;  // all non-negative; m_osc > 0 checked at use
};

struct DispersionMode {
    double q;
    double omega;
};

/// An atomic dipole transition bathed in an ambient photon field.
struct Transition {
    double omega12 = 0.0;      ///< transition frequency, rad/s
    double r12 = 0.0;          ///< |<1|r|2>| dipole matrix element, m
    double photon_count = 0.0; ///< ambient occupation n

    void validate() const;
};

enum class RadiativeDirection { emission, absorption };

struct TransitionRate {
    double P12;        ///< transitions per second
    double intensity;  ///< P12 * hbar * omega12, W
};

/// eps = 1 + sum_q 4 pi n [omega(q)-omega_c] / ( m {4(omega(q)-omega_c)^2
/// + tau^2 omega(q)^4} ), summed literally over the mode list. The
/// odd-in-detuning numerator is kept exactly as given.
double epsilon_dispersion(const std::vector<DispersionMode>& modes,
                          const ResonanceParams& params);

/// v = C / sqrt(epsilon mu) = C / n.
double phase_velocity(const Medium& medium, const PhysicalConstants& k);

struct FresnelDrag {
    double approx;            ///< C/n + v (1 - 1/n^2), m/s
    double exact;             ///< relativistic composition of C/n with the flow
    double drag_coefficient;  ///< 1 - 1/n^2
};

/// Both the first-order dragged-light speed and the exact composition, so
/// callers can quantify the O(v^2) gap. Throws for |v_medium| >= C or n < 1.
FresnelDrag fresnel_drag(const Medium& medium, double v_medium,
                         const PhysicalConstants& k);

/// Dipole transition rate (4/3)(e_g^2/(hbar C^3)) omega12^3 r12^2 evaluated
/// in Gaussian form (e_g^2 = e^2/(4 pi eps0) from SI inputs), scaled by
/// (n+1) for emission or n for absorption; intensity = P12 hbar omega12.
TransitionRate transition_rate(const Transition& t, RadiativeDirection direction,
                               const PhysicalConstants& k);

struct SweepPoint {
    double omega;
    double epsilon;
    double n;
    double phase_velocity;
};

/// epsilon/n/phase-velocity sweep over uniformly spaced frequencies, each
/// evaluated as a single light-like mode (q = omega/C).
std::vector<SweepPoint> dispersion_sweep(const ResonanceParams& params,
                                         double omega_min, double omega_max,
                                         std::size_t count, const PhysicalConstants& k);

void write_sweep_csv(const std::vector<SweepPoint>& sweep, const std::string& path);

}  // namespace relwave::optics
