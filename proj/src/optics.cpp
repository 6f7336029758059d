#include "relwave/optics.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "relwave/errors.hpp"
#include "relwave/io_util.hpp"
#include "relwave/kinematics.hpp"

namespace relwave::optics {

using std::numbers::pi;

Medium Medium::from_epsilon_mu(double epsilon, double mu) {
    Medium m{epsilon, mu, std::sqrt(epsilon * mu)};
    m.validate();
    return m;
}

Medium Medium::from_index(double n, double mu) {
    Medium m{n * n / mu, mu, n};
    m.validate();
    return m;
}

void Medium::validate() const {
    if (!(epsilon > 0.0) || !(mu > 0.0))
        throw std::domain_error("medium constants must be positive");
    const double n_derived = std::sqrt(epsilon * mu);
    if (std::abs(n_derived - n) > 1e-12 * n_derived)
        throw std::domain_error("medium index inconsistent with sqrt(epsilon*mu)");
}

void ResonanceParams::validate() const {
    if (oscillator_density < 0.0 || omega_c < 0.0 || m_osc < 0.0 || tau_damp < 0.0)
        throw std::domain_error("resonance parameters must be non-negative");
}

void Transition::validate() const {
    if (!(omega12 > 0.0)) throw std::domain_error("transition frequency must be positive");
    if (r12 < 0.0) throw std::domain_error("matrix element magnitude must be >= 0");
    if (photon_count < 0.0) throw std::domain_error("photon count must be >= 0");
}

double epsilon_dispersion(const std::vector<DispersionMode>& modes,
                          const ResonanceParams& params) {
    params.validate();
    if (!(params.m_osc > 0.0)) throw std::domain_error("oscillator mass must be positive");
    double eps = 1.0;
    for (const DispersionMode& mode : modes) {
        const double detune = mode.omega - params.omega_c;
        const double w2 = mode.omega * mode.omega;
        const double denom =
            params.m_osc *
            (4.0 * detune * detune + params.tau_damp * params.tau_damp * w2 * w2);
        if (denom == 0.0) continue;  // on-resonance undamped limit: numerator vanishes too
        eps += 4.0 * pi * params.oscillator_density * detune / denom;
    }
    return eps;
}

double phase_velocity(const Medium& medium, const PhysicalConstants& k) {
    medium.validate();
    return k.C / std::sqrt(medium.epsilon * medium.mu);
}

FresnelDrag fresnel_drag(const Medium& medium, double v_medium,
                         const PhysicalConstants& k) {
    medium.validate();
    if (medium.n < 1.0) throw std::domain_error("drag requires n >= 1");
    if (!(std::abs(v_medium) < k.C))
        throw std::domain_error("medium velocity must satisfy |v| < C");
    const double coeff = 1.0 - 1.0 / (medium.n * medium.n);
    const double in_medium = k.C / medium.n;
    const double approx = in_medium + v_medium * coeff;
    const double exact =
        kinematics::compose_velocities({in_medium, 0.0, 0.0}, -v_medium, k).x;
    return {approx, exact, coeff};
}

TransitionRate transition_rate(const Transition& t, RadiativeDirection direction,
                               const PhysicalConstants& k) {
    t.validate();
    const double e2_gauss = k.e * k.e / (4.0 * pi * k.eps0);
    const double base = (4.0 / 3.0) * e2_gauss / (k.hbar * k.C * k.C * k.C) *
                        t.omega12 * t.omega12 * t.omega12 * t.r12 * t.r12;
    const double scale = direction == RadiativeDirection::emission
                             ? t.photon_count + 1.0
                             : t.photon_count;
    const double p12 = base * scale;
    return {p12, p12 * k.hbar * t.omega12};
}

std::vector<SweepPoint> dispersion_sweep(const ResonanceParams& params,
                                         double omega_min, double omega_max,
                                         std::size_t count, const PhysicalConstants& k) {
    if (count < 2) throw std::domain_error("sweep needs at least 2 points");
    if (!(omega_min > 0.0) || !(omega_max > omega_min))
        throw std::domain_error("sweep needs 0 < omega_min < omega_max");
    std::vector<SweepPoint> sweep;
    sweep.reserve(count);
    const double step = (omega_max - omega_min) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double omega = omega_min + static_cast<double>(i) * step;
        const double eps = epsilon_dispersion({{omega / k.C, omega}}, params);
        const double n = eps > 0.0 ? std::sqrt(eps) : std::nan("");
        const double v = eps > 0.0 ? k.C / n : std::nan("");
        sweep.push_back({omega, eps, n, v});
    }
    return sweep;
}

void write_sweep_csv(const std::vector<SweepPoint>& sweep, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "omega[rad/s],epsilon[1],n[1],phase_velocity[m/s]\n";
    for (const SweepPoint& p : sweep)
        out << io::format_double(p.omega) << ',' << io::format_double(p.epsilon) << ','
            << io::format_double(p.n) << ',' << io::format_double(p.phase_velocity)
            << "\n";
}

}  // namespace relwave::optics
