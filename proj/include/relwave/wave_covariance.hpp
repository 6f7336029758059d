#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "relwave/constants.hpp"
#include "relwave/kinematics.hpp"
#include "relwave/vec3.hpp"

namespace relwave::waves {

/// Uniform 1+1D sampling window: nt time rows by nx space columns.
struct GridGeometry {
    std::size_t nt = 0;
    std::size_t nx = 0;
    double dt = 0.0;
    double dx = 0.0;
    double t0 = 0.0;
    double x0 = 0.0;
};

/// Row-major field samples phi(t, x) on a uniform grid.
struct FieldGrid {
    std::vector<double> values;
    std::size_t nt = 0;
    std::size_t nx = 0;
    double dt = 0.0;
    double dx = 0.0;
    double t0 = 0.0;
    double x0 = 0.0;

    double& at(std::size_t i, std::size_t j) { return values[i * nx + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * nx + j]; }
    double time_of(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    double pos_of(std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
};

struct PlaneWave {
    Vec3 k;                  ///< wavevector, rad/m
    double omega = 0.0;      ///< angular frequency, rad/s
    double amplitude = 1.0;
    double phase0 = 0.0;

    /// A light-like wave travelling along +-x: |k| = omega/C.
    static PlaneWave luminal_x(double omega, int direction, const PhysicalConstants& kc);

    bool is_luminal(const PhysicalConstants& kc, double rel_tol = 1e-12) const;

    /// k.x - omega t + phase0 at a spacetime event (x along the k projection).
    double phase_at(const kinematics::Event& ev) const;
};

using FieldFn = std::function<double(double t, double x)>;

/// amplitude * cos(k.x x - omega t + phase0) restricted to the t-x plane.
FieldFn plane_wave_field(const PlaneWave& w);

/// Fills a grid with exact analytic samples. Throws std::domain_error for
/// geometry smaller than 5 points per axis.
FieldGrid sample_field(const FieldFn& f, const GridGeometry& g);

struct Residual {
    FieldGrid grid;  ///< interior points only, (nt-2) x (nx-2)
    double l2_norm;  ///< root mean square over the interior
};

/// Central-difference d^2/dx^2 - (1/C^2) d^2/dt^2 on interior points.
Residual dalembertian_residual(const FieldGrid& grid, const PhysicalConstants& kc);

enum class TransformKind { lorentz, voigt, galilean };

/// Residual norm of the transformed wave, evaluated by substituting the
/// inverse coordinate transform into the analytic waveform and resampling on
/// a fresh grid (no interpolation error enters the comparison).
double transformed_residual_norm(const PlaneWave& w, double v, TransformKind kind,
                                 const GridGeometry& g, const PhysicalConstants& kc);

struct CovarianceComparison {
    double lorentz;
    double voigt;
    double galilean;
};

CovarianceComparison covariance_comparison(const PlaneWave& w, double v,
                                           const GridGeometry& g,
                                           const PhysicalConstants& kc);

/// (omega', k') by the four-vector boost of (omega/C, k). The phase
/// k.x - omega t is invariant and light-like waves stay light-like.
PlaneWave transform_plane_wave(const PlaneWave& w, const kinematics::Boost& b,
                               const PhysicalConstants& kc);

/// f' = f (c_sound + v_observer) / (c_sound - v_source); velocities positive
/// toward the counterpart. Throws for |v_source| >= c_sound.
double acoustic_doppler(double f, double v_source, double v_observer, double c_sound);

/// CSV export, row-major, header line carrying dt/dx/origin.
void write_grid_csv(const FieldGrid& g, const std::string& path);

}  // namespace relwave::waves
