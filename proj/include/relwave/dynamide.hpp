#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "relwave/constants.hpp"
#include "relwave/vec3.hpp"

namespace relwave::dynamide {

/// Parameters of the periodic oscillator chain that realises the vacuum
/// lattice: on-site stiffness chi_tilde inside each cell plus
/// nearest-neighbour stiffness chi between cells.
struct ChainConfig {
    std::size_t N = 0;        ///< cell count
    double Theta = 0.0;       ///< oscillator inertial mass, kg
    double chi_tilde = 0.0;   ///< intra-cell spring constant, N/m
    double chi = 0.0;         ///< inter-cell spring constant, N/m
    double a = 0.0;           ///< lattice spacing, m
    double Omega0 = 0.0;      ///< cell volume, m^3
    double dt = 0.0;          ///< integrator step, s
    std::size_t steps = 0;    ///< integration steps
    std::uint64_t seed = 0;   ///< RNG seed for random initial profiles

    enum class Boundary { periodic };
    Boundary boundary = Boundary::periodic;

    double total_volume() const { return static_cast<double>(N) * Omega0; }

    /// Analytic band edge sqrt(2 chi_tilde/Theta + 4 chi/Theta).
    double band_edge() const;

    /// Checks lattice parameters (N >= 2, positive physical constants).
    /// The dt stability bound is enforced by simulate_chain.
    void validate() const;
};

/// One lattice mode: scalar wavevector along the chain plus the propagation
/// direction and transverse polarization used by the field formulas.
struct Mode {
    double q = 0.0;           ///< wavevector, rad/m
    double omega = 0.0;       ///< angular frequency, rad/s
    double occupation = 0.0;  ///< quantum occupation n_q
    Vec3 direction{1, 0, 0};  ///< unit propagation vector
    Vec3 polarization{0, 1, 0};  ///< unit transverse polarization

    /// direction and polarization must be unit length and perpendicular
    /// within 1e-12; occupation >= 0, omega > 0.
    void validate() const;
};

/// Per-mode amplitude prefactors of the quantized fields.
struct ModeAmplitudes {
    double P0;  ///< polarization, C/m^2
    double E0;  ///< electric intensity, V/m
    double A0;  ///< vector potential, V s/m
    double H0;  ///< magnetic intensity, A/m
};

/// omega_tilde = sqrt(2 chi_tilde / Theta), the intra-cell frequency.
double intra_frequency(double chi_tilde, double Theta);

/// omega = sqrt(4 chi / (2 Theta)); with chi = 2 chi_tilde the squared
/// ratio to intra_frequency is exactly 2.
double collective_frequency(double chi, double Theta);

/// Oscillator mass implied by the Coulomb relation for a cell of volume
/// Omega0 oscillating at omega: Theta = e^2 / (pi Omega0 eps0 omega^2).
double theta_from_cell(double Omega0, double omega, const PhysicalConstants& k);

/// Amplitude prefactors for one mode on the given lattice:
///   P0 = (2e / (Omega0 sqrt(N))) sqrt(hbar / (2 Theta omega))
///   E0 = sqrt(2 pi hbar omega / (Omega eps0))
///   A0 = sqrt(2 pi hbar / (Omega omega eps0))
///   H0 = sqrt(2 pi hbar omega / (Omega mu0))
/// with Omega = N Omega0. E0 = omega A0 and E0/H0 = sqrt(mu0/eps0) always;
/// P0/eps0 = E0 when Theta comes from theta_from_cell.
ModeAmplitudes mode_amplitudes(const Mode& m, const ChainConfig& cfg,
                               const PhysicalConstants& k);

/// Ratio of the mu0-form vector-potential prefactor
/// sqrt(2 pi hbar omega mu0 / (Omega q^2)) to the eps0 form; equals 1 for
/// light-like modes (omega = C q) and omega/(C q) otherwise.
double g2_consistency(const Mode& m, const ChainConfig& cfg, const PhysicalConstants& k);

/// The two terms of v x (n x I) for a transverse mode: the component along
/// the propagation direction and the component along the polarization.
struct ForceTerms {
    Vec3 along_direction;     ///< n (v . I)
    Vec3 along_polarization;  ///< -I (v . n)
};

ForceTerms force_decomposition(const Vec3& v_charge, const Mode& m);

/// Time-averaged field momentum per mode sum: sum_q n_q_hat
/// (hbar omega / (Omega C)) (n_q + 1/2). The self-beating cross terms
/// average to zero over a period and are excluded here; see
/// momentum_spectrum_instantaneous for the full oscillating form.
Vec3 momentum_spectrum(const std::vector<Mode>& modes, const ChainConfig& cfg,
                       const PhysicalConstants& k);

/// Instantaneous momentum including the cross terms oscillating at 2 omega:
/// per mode, (hbar omega / (2 Omega C)) [ (2 n_q + 1) + 2 n_q cos 2(omega t - q r.n) ].
Vec3 momentum_spectrum_instantaneous(const std::vector<Mode>& modes,
                                     const ChainConfig& cfg, const PhysicalConstants& k,
                                     double t, const Vec3& r);

/// Needle-soliton cross section sigma_1 = pi (C/omega)^2.
double photon_cross_section(double omega, const PhysicalConstants& k);

/// Analytic lattice dispersion omega(q)^2 = omega_tilde^2 + (4 chi/Theta) sin^2(q a / 2).
double dispersion_omega(const ChainConfig& cfg, double q);

/// Wavevector of mode index m on the periodic chain: q = 2 pi m / (N a).
double mode_wavevector(const ChainConfig& cfg, std::size_t mode_index);

/// Initial condition for the chain: either a single excited normal mode, an
/// explicit displacement/velocity profile, or a seeded random profile.
struct ChainInitial {
    enum class Kind { mode, profile, random };
    Kind kind = Kind::mode;
    std::size_t mode_index = 0;
    double amplitude = 1.0;
    std::vector<double> displacement;
    std::vector<double> velocity;

    static ChainInitial single_mode(std::size_t index, double amplitude = 1.0);
    static ChainInitial profile(std::vector<double> u0, std::vector<double> v0);
    static ChainInitial random(double amplitude = 1.0);
};

struct DispersionPoint {
    double q;
    double omega_analytic;
    double omega_measured;
};

struct ChainResult {
    std::vector<std::size_t> snapshot_steps;
    std::vector<std::vector<double>> displacements;  ///< one row per snapshot
    std::vector<std::vector<double>> velocities;     ///< time-synchronized
    std::vector<DispersionPoint> dispersion;
    double initial_energy = 0.0;
    double energy_drift = 0.0;  ///< max |E - E0| / E0 over the run
};

/// Integrates the chain with a symplectic leapfrog scheme and measures mode
/// frequencies from the discrete Fourier transform peak of each requested
/// normal-mode coordinate. The reported energy is the leapfrog invariant
/// (Theta/2) v_- . v_+ + V(u), which the scheme conserves exactly for this
/// linear lattice, so drift reflects roundoff only. Throws std::domain_error
/// before integrating when dt >= 2/band_edge.
ChainResult simulate_chain(const ChainConfig& cfg, const ChainInitial& initial,
                           const std::vector<std::size_t>& measure_modes = {},
                           std::size_t snapshot_every = 0);

/// DFT peak of a real series (Hann window, parabolic bin interpolation),
/// returned as an angular frequency in rad/s.
double dominant_angular_frequency(const std::vector<double>& samples, double dt);

/// CSV exports: (step, site, displacement, velocity) rows and
/// (q, omega_analytic, omega_measured) rows.
void write_trajectory_csv(const ChainResult& r, const std::string& path);
void write_dispersion_csv(const ChainResult& r, const std::string& path);

}  // namespace relwave::dynamide
