#include "relwave/dynamide.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

#include "relwave/errors.hpp"
#include "relwave/io_util.hpp"

namespace relwave::dynamide {

using std::numbers::pi;

double ChainConfig::band_edge() const {
    return std::sqrt(2.0 * chi_tilde / Theta + 4.0 * chi / Theta);
}

void ChainConfig::validate() const {
    if (N < 2) throw std::domain_error("chain needs at least 2 cells");
    if (!(Theta > 0.0) || !(chi_tilde > 0.0) || !(chi > 0.0) || !(a > 0.0) ||
        !(Omega0 > 0.0))
        throw std::domain_error("chain physical parameters must be positive");
}

void Mode::validate() const {
    if (!(omega > 0.0)) throw std::domain_error("mode frequency must be positive");
    if (!(occupation >= 0.0)) throw std::domain_error("occupation must be >= 0");
    if (std::abs(direction.norm() - 1.0) > 1e-12)
        throw std::domain_error("mode direction must be a unit vector");
    if (std::abs(polarization.norm() - 1.0) > 1e-12)
        throw std::domain_error("mode polarization must be a unit vector");
    if (std::abs(dot(direction, polarization)) > 1e-12)
        throw std::domain_error("polarization must be perpendicular to the direction");
}

double intra_frequency(double chi_tilde, double Theta) {
    if (!(chi_tilde > 0.0) || !(Theta > 0.0))
        throw std::domain_error("spring constant and mass must be positive");
    return std::sqrt(2.0 * chi_tilde / Theta);
}

double collective_frequency(double chi, double Theta) {
    if (!(chi > 0.0) || !(Theta > 0.0))
        throw std::domain_error("spring constant and mass must be positive");
    return std::sqrt(4.0 * chi / (2.0 * Theta));
}

double theta_from_cell(double Omega0, double omega, const PhysicalConstants& k) {
    if (!(Omega0 > 0.0) || !(omega > 0.0))
        throw std::domain_error("cell volume and frequency must be positive");
    return k.e * k.e / (pi * Omega0 * k.eps0 * omega * omega);
}

ModeAmplitudes mode_amplitudes(const Mode& m, const ChainConfig& cfg,
                               const PhysicalConstants& k) {
    m.validate();
    cfg.validate();
    const double Omega = cfg.total_volume();
    const double n = static_cast<double>(cfg.N);
    const double P0 = (2.0 * k.e / (cfg.Omega0 * std::sqrt(n))) *
                      std::sqrt(k.hbar / (2.0 * cfg.Theta * m.omega));
    const double E0 = std::sqrt(2.0 * pi * k.hbar * m.omega / (Omega * k.eps0));
    const double A0 = std::sqrt(2.0 * pi * k.hbar / (Omega * m.omega * k.eps0));
    const double H0 = std::sqrt(2.0 * pi * k.hbar * m.omega / (Omega * k.mu0));
    return {P0, E0, A0, H0};
}

double g2_consistency(const Mode& m, const ChainConfig& cfg, const PhysicalConstants& k) {
    m.validate();
    if (!(m.q > 0.0)) throw std::domain_error("mode wavevector must be positive");
    const double Omega = cfg.total_volume();
    const double mu_form = std::sqrt(2.0 * pi * k.hbar * m.omega * k.mu0 / (Omega * m.q * m.q));
    const double eps_form = std::sqrt(2.0 * pi * k.hbar / (Omega * m.omega * k.eps0));
    return mu_form / eps_form;
}

ForceTerms force_decomposition(const Vec3& v_charge, const Mode& m) {
    m.validate();
    return {m.direction * dot(v_charge, m.polarization),
            -1.0 * m.polarization * dot(v_charge, m.direction)};
}

Vec3 momentum_spectrum(const std::vector<Mode>& modes, const ChainConfig& cfg,
                       const PhysicalConstants& k) {
    const double Omega = cfg.total_volume();
    Vec3 p{};
    for (const Mode& m : modes) {
        m.validate();
        p += m.direction * (k.hbar * m.omega / (Omega * k.C) * (m.occupation + 0.5));
    }
    return p;
}

Vec3 momentum_spectrum_instantaneous(const std::vector<Mode>& modes,
                                     const ChainConfig& cfg, const PhysicalConstants& k,
                                     double t, const Vec3& r) {
    const double Omega = cfg.total_volume();
    Vec3 p{};
    for (const Mode& m : modes) {
        m.validate();
        const double theta = m.omega * t - m.q * dot(r, m.direction);
        const double mean = 2.0 * m.occupation + 1.0;
        const double beat = 2.0 * m.occupation * std::cos(2.0 * theta);
        p += m.direction * (k.hbar * m.omega / (2.0 * Omega * k.C) * (mean + beat));
    }
    return p;
}

double photon_cross_section(double omega, const PhysicalConstants& k) {
    if (!(omega > 0.0)) throw std::domain_error("frequency must be positive");
    const double cw = k.C / omega;
    return pi * cw * cw;
}

double dispersion_omega(const ChainConfig& cfg, double q) {
    const double wt2 = 2.0 * cfg.chi_tilde / cfg.Theta;
    const double s = std::sin(q * cfg.a / 2.0);
    return std::sqrt(wt2 + 4.0 * cfg.chi / cfg.Theta * s * s);
}

double mode_wavevector(const ChainConfig& cfg, std::size_t mode_index) {
    return 2.0 * pi * static_cast<double>(mode_index) /
           (static_cast<double>(cfg.N) * cfg.a);
}

ChainInitial ChainInitial::single_mode(std::size_t index, double amplitude) {
    ChainInitial init;
    init.kind = Kind::mode;
    init.mode_index = index;
    init.amplitude = amplitude;
    return init;
}

ChainInitial ChainInitial::profile(std::vector<double> u0, std::vector<double> v0) {
    ChainInitial init;
    init.kind = Kind::profile;
    init.displacement = std::move(u0);
    init.velocity = std::move(v0);
    return init;
}

ChainInitial ChainInitial::random(double amplitude) {
    ChainInitial init;
    init.kind = Kind::random;
    init.amplitude = amplitude;
    return init;
}

namespace {

void chain_acceleration(const ChainConfig& cfg, const std::vector<double>& u,
                        std::vector<double>& acc) {
    const std::size_t n = cfg.N;
    for (std::size_t j = 0; j < n; ++j) {
        const double left = u[(j + n - 1) % n];
        const double right = u[(j + 1) % n];
        acc[j] = (-2.0 * cfg.chi_tilde * u[j] + cfg.chi * (right - 2.0 * u[j] + left)) /
                 cfg.Theta;
    }
}

double potential_energy(const ChainConfig& cfg, const std::vector<double>& u) {
    const std::size_t n = cfg.N;
    double v = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double stretch = u[(j + 1) % n] - u[j];
        v += cfg.chi_tilde * u[j] * u[j] + 0.5 * cfg.chi * stretch * stretch;
    }
    return v;
}

// Hann-windowed radix-2 FFT magnitude peak with parabolic interpolation.
void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

double dominant_angular_frequency(const std::vector<double>& samples, double dt) {
    if (samples.size() < 8) throw std::domain_error("series too short for a DFT peak");
    if (!(dt > 0.0)) throw std::domain_error("sample step must be positive");

    std::size_t n = 1;
    while (n * 2 <= samples.size()) n *= 2;

    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w =
            0.5 * (1.0 - std::cos(2.0 * pi * static_cast<double>(i) /
                                  static_cast<double>(n - 1)));
        buf[i] = samples[i] * w;
    }
    fft_radix2(buf);

    const std::size_t half = n / 2;
    std::size_t peak = 1;
    double peak_mag = 0.0;
    for (std::size_t i = 1; i < half; ++i) {  // skip DC
        const double mag = std::abs(buf[i]);
        if (mag > peak_mag) {
            peak_mag = mag;
            peak = i;
        }
    }
    if (peak_mag == 0.0) return 0.0;

    double delta = 0.0;
    if (peak > 1 && peak + 1 < half) {
        const double lm = std::log(std::max(std::abs(buf[peak - 1]), 1e-300));
        const double cm = std::log(peak_mag);
        const double rm = std::log(std::max(std::abs(buf[peak + 1]), 1e-300));
        const double denom = 2.0 * cm - lm - rm;
        if (denom > 0.0) delta = 0.5 * (rm - lm) / denom;
    }
    const double bin = static_cast<double>(peak) + std::clamp(delta, -0.5, 0.5);
    return 2.0 * pi * bin / (static_cast<double>(n) * dt);
}

ChainResult simulate_chain(const ChainConfig& cfg, const ChainInitial& initial,
                           const std::vector<std::size_t>& measure_modes,
                           std::size_t snapshot_every) {
    cfg.validate();
    if (!(cfg.dt > 0.0) || cfg.steps == 0)
        throw std::domain_error("integration needs dt > 0 and at least one step");
    if (!(cfg.dt < 2.0 / cfg.band_edge()))
        throw std::domain_error("dt exceeds the leapfrog stability bound 2/omega_max");

    const std::size_t n = cfg.N;
    std::vector<double> u(n, 0.0), v(n, 0.0);

    switch (initial.kind) {
        case ChainInitial::Kind::mode: {
            if (initial.mode_index >= n)
                throw std::domain_error("mode index out of range");
            const double q = mode_wavevector(cfg, initial.mode_index);
            for (std::size_t j = 0; j < n; ++j)
                u[j] = initial.amplitude * std::cos(q * static_cast<double>(j) * cfg.a);
            break;
        }
        case ChainInitial::Kind::profile: {
            if (initial.displacement.size() != n || initial.velocity.size() != n)
                throw std::domain_error("profile size must match the chain length");
            u = initial.displacement;
            v = initial.velocity;
            break;
        }
        case ChainInitial::Kind::random: {
            std::mt19937_64 rng(cfg.seed);
            std::uniform_real_distribution<double> dist(-initial.amplitude,
                                                        initial.amplitude);
            for (std::size_t j = 0; j < n; ++j) u[j] = dist(rng);
            break;
        }
    }

    std::vector<std::size_t> modes = measure_modes;
    if (modes.empty() && initial.kind == ChainInitial::Kind::mode)
        modes.push_back(initial.mode_index);
    for (std::size_t m : modes)
        if (m >= n) throw std::domain_error("measured mode index out of range");

    // Projection tables for the measured normal-mode coordinates.
    std::vector<std::vector<double>> cos_table(modes.size(), std::vector<double>(n));
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
        const double q = mode_wavevector(cfg, modes[mi]);
        for (std::size_t j = 0; j < n; ++j)
            cos_table[mi][j] = std::cos(q * static_cast<double>(j) * cfg.a);
    }
    std::vector<std::vector<double>> mode_series(modes.size());
    for (auto& s : mode_series) s.reserve(cfg.steps + 1);

    ChainResult result;
    const bool zero_start = std::all_of(u.begin(), u.end(), [](double x) { return x == 0.0; }) &&
                            std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });

    std::vector<double> acc(n, 0.0);
    chain_acceleration(cfg, u, acc);

    // Leapfrog: half kick, then drift/kick. Energy is tracked with the
    // staggered-velocity product, the exact invariant of the scheme.
    std::vector<double> v_half(n), v_next(n);
    for (std::size_t j = 0; j < n; ++j) v_half[j] = v[j] + 0.5 * cfg.dt * acc[j];

    const double e0 = 0.5 * cfg.Theta *
                          [&] {
                              double s = 0.0;
                              for (std::size_t j = 0; j < n; ++j) s += v[j] * v[j];
                              return s;
                          }() +
                      potential_energy(cfg, u);
    result.initial_energy = e0;

    auto record_modes = [&] {
        for (std::size_t mi = 0; mi < modes.size(); ++mi) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += u[j] * cos_table[mi][j];
            mode_series[mi].push_back(s);
        }
    };
    auto record_snapshot = [&](std::size_t step, const std::vector<double>& vel) {
        result.snapshot_steps.push_back(step);
        result.displacements.push_back(u);
        result.velocities.push_back(vel);
    };

    record_modes();
    if (snapshot_every > 0) record_snapshot(0, v);

    double e_ref = 0.0;
    double max_drift = 0.0;
    bool have_ref = false;

    for (std::size_t step = 1; step <= cfg.steps; ++step) {
        for (std::size_t j = 0; j < n; ++j) u[j] += cfg.dt * v_half[j];
        chain_acceleration(cfg, u, acc);
        for (std::size_t j = 0; j < n; ++j) v_next[j] = v_half[j] + cfg.dt * acc[j];

        double kin = 0.0;
        for (std::size_t j = 0; j < n; ++j) kin += v_half[j] * v_next[j];
        const double energy = 0.5 * cfg.Theta * kin + potential_energy(cfg, u);
        if (!have_ref) {
            e_ref = energy;
            have_ref = true;
        } else if (e_ref != 0.0) {
            max_drift = std::max(max_drift, std::abs(energy - e_ref) / std::abs(e_ref));
        } else {
            max_drift = std::max(max_drift, std::abs(energy - e_ref));
        }

        record_modes();
        if (snapshot_every > 0 && (step % snapshot_every == 0 || step == cfg.steps)) {
            std::vector<double> v_sync(n);
            for (std::size_t j = 0; j < n; ++j) v_sync[j] = 0.5 * (v_half[j] + v_next[j]);
            record_snapshot(step, v_sync);
        }
        std::swap(v_half, v_next);
    }
    result.energy_drift = max_drift;

    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
        const double q = mode_wavevector(cfg, modes[mi]);
        double measured = 0.0;
        if (!zero_start) measured = dominant_angular_frequency(mode_series[mi], cfg.dt);
        result.dispersion.push_back({q, dispersion_omega(cfg, q), measured});
    }
    return result;
}

void write_trajectory_csv(const ChainResult& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "step,site,displacement[m],velocity[m/s]\n";
    for (std::size_t s = 0; s < r.snapshot_steps.size(); ++s)
        for (std::size_t j = 0; j < r.displacements[s].size(); ++j)
            out << r.snapshot_steps[s] << ',' << j << ','
                << io::format_double(r.displacements[s][j]) << ','
                << io::format_double(r.velocities[s][j]) << "\n";
}

void write_dispersion_csv(const ChainResult& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "q[rad/m],omega_analytic[rad/s],omega_measured[rad/s]\n";
    for (const auto& d : r.dispersion)
        out << io::format_double(d.q) << ',' << io::format_double(d.omega_analytic)
            << ',' << io::format_double(d.omega_measured) << "\n";
}

}  // namespace relwave::dynamide
