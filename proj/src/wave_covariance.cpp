#include "relwave/wave_covariance.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "relwave/errors.hpp"
#include "relwave/io_util.hpp"

namespace relwave::waves {

PlaneWave PlaneWave::luminal_x(double omega, int direction, const PhysicalConstants& kc) {
    if (!(omega > 0.0)) throw std::domain_error("plane wave frequency must be positive");
    const double kx = (direction < 0 ? -1.0 : 1.0) * omega / kc.C;
    return {{kx, 0.0, 0.0}, omega, 1.0, 0.0};
}

bool PlaneWave::is_luminal(const PhysicalConstants& kc, double rel_tol) const {
    return std::abs(k.norm() - omega / kc.C) <= rel_tol * (omega / kc.C);
}

double PlaneWave::phase_at(const kinematics::Event& ev) const {
    return k.x * ev.x + k.y * ev.y + k.z * ev.z - omega * ev.t + phase0;
}

FieldFn plane_wave_field(const PlaneWave& w) {
    return [w](double t, double x) {
        return w.amplitude * std::cos(w.k.x * x - w.omega * t + w.phase0);
    };
}

FieldGrid sample_field(const FieldFn& f, const GridGeometry& g) {
    if (g.nt < 5 || g.nx < 5)
        throw std::domain_error("grid must have at least 5 points per axis");
    if (!(g.dt > 0.0) || !(g.dx > 0.0))
        throw std::domain_error("grid steps must be positive");
    FieldGrid grid{{}, g.nt, g.nx, g.dt, g.dx, g.t0, g.x0};
    grid.values.resize(g.nt * g.nx);
    for (std::size_t i = 0; i < g.nt; ++i) {
        const double t = grid.time_of(i);
        for (std::size_t j = 0; j < g.nx; ++j) grid.at(i, j) = f(t, grid.pos_of(j));
    }
    return grid;
}

Residual dalembertian_residual(const FieldGrid& grid, const PhysicalConstants& kc) {
    if (grid.nt < 5 || grid.nx < 5)
        throw std::domain_error("grid must have at least 5 points per axis");
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    const double inv_c2dt2 = 1.0 / (kc.C * kc.C * grid.dt * grid.dt);

    Residual res;
    res.grid = FieldGrid{{},       grid.nt - 2,      grid.nx - 2,      grid.dt,
                         grid.dx,  grid.t0 + grid.dt, grid.x0 + grid.dx};
    res.grid.values.resize(res.grid.nt * res.grid.nx);

    double sum_sq = 0.0;  // fixed row-major order keeps the norm deterministic
    for (std::size_t i = 1; i + 1 < grid.nt; ++i) {
        for (std::size_t j = 1; j + 1 < grid.nx; ++j) {
            const double d2x =
                (grid.at(i, j - 1) - 2.0 * grid.at(i, j) + grid.at(i, j + 1)) * inv_dx2;
            const double d2t =
                (grid.at(i - 1, j) - 2.0 * grid.at(i, j) + grid.at(i + 1, j)) * inv_c2dt2;
            const double r = d2x - d2t;
            res.grid.at(i - 1, j - 1) = r;
            sum_sq += r * r;
        }
    }
    res.l2_norm = std::sqrt(sum_sq / static_cast<double>(res.grid.values.size()));
    return res;
}

namespace {

// Inverse coordinate maps: primed grid point -> unprimed (t, x) to feed the
// analytic waveform.
struct InverseMap {
    double tt, tx;  // t = tt*t' + tx*x'
    double xt, xx;  // x = xt*t' + xx*x'
};

InverseMap inverse_map(double v, TransformKind kind, const PhysicalConstants& kc) {
    const double c2 = kc.C * kc.C;
    switch (kind) {
        case TransformKind::lorentz: {
            const double g = kinematics::gamma_factor(v, kc);
            return {g, g * v / c2, g * v, g};
        }
        case TransformKind::voigt: {
            const double g = kinematics::gamma_factor(v, kc);
            const double g2 = g * g;
            return {g2, g2 * v / c2, g2 * v, g2};
        }
        case TransformKind::galilean:
            return {1.0, 0.0, v, 1.0};
    }
    throw std::logic_error("unreachable transform kind");
}

}  // namespace

double transformed_residual_norm(const PlaneWave& w, double v, TransformKind kind,
                                 const GridGeometry& g, const PhysicalConstants& kc) {
    if (!(std::abs(v) < kc.C))
        throw std::domain_error("frame velocity must satisfy |v| < C");
    const InverseMap m = inverse_map(v, kind, kc);
    const FieldFn base = plane_wave_field(w);
    const FieldFn transformed = [m, base](double tp, double xp) {
        return base(m.tt * tp + m.tx * xp, m.xt * tp + m.xx * xp);
    };
    return dalembertian_residual(sample_field(transformed, g), kc).l2_norm;
}

CovarianceComparison covariance_comparison(const PlaneWave& w, double v,
                                           const GridGeometry& g,
                                           const PhysicalConstants& kc) {
    return {transformed_residual_norm(w, v, TransformKind::lorentz, g, kc),
            transformed_residual_norm(w, v, TransformKind::voigt, g, kc),
            transformed_residual_norm(w, v, TransformKind::galilean, g, kc)};
}

PlaneWave transform_plane_wave(const PlaneWave& w, const kinematics::Boost& b,
                               const PhysicalConstants& kc) {
    const double w_over_c = w.omega / kc.C;
    const double kx = b.gamma * (w.k.x - b.v * w_over_c / kc.C);
    const double wp_over_c = b.gamma * (w_over_c - b.v * w.k.x / kc.C);
    return {{kx, w.k.y, w.k.z}, wp_over_c * kc.C, w.amplitude, w.phase0};
}

double acoustic_doppler(double f, double v_source, double v_observer, double c_sound) {
    if (!(c_sound > 0.0)) throw std::domain_error("sound speed must be positive");
    if (!(std::abs(v_source) < c_sound))
        throw std::domain_error("source must move slower than sound");
    return f * (c_sound + v_observer) / (c_sound - v_source);
}

void write_grid_csv(const FieldGrid& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "dt=" << io::format_double(g.dt) << ",dx=" << io::format_double(g.dx)
        << ",t0=" << io::format_double(g.t0) << ",x0=" << io::format_double(g.x0)
        << ",nt=" << g.nt << ",nx=" << g.nx << "\n";
    for (std::size_t i = 0; i < g.nt; ++i) {
        for (std::size_t j = 0; j < g.nx; ++j) {
            if (j) out << ',';
            out << io::format_double(g.at(i, j));
        }
        out << "\n";
    }
}

}  // namespace relwave::waves
