#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "relwave/wave_covariance.hpp"
#include "test_helpers.hpp"

using namespace relwave;
using namespace relwave::waves;
using testutil::rel_err;

namespace {

const PhysicalConstants si = PhysicalConstants::si();
const PhysicalConstants nat = PhysicalConstants::natural();

GridGeometry square_grid(std::size_t n, double span_t, double span_x) {
    return {n, n, span_t / static_cast<double>(n - 1),
            span_x / static_cast<double>(n - 1), 0.0, 0.0};
}

// Residual norms of a transformed luminal wave on 64/128/256 points per
// wavelength, two wavelengths and two periods of window.
std::array<double, 3> refinement_norms(TransformKind kind, double v,
                                       const PhysicalConstants& k) {
    const PlaneWave wave = PlaneWave::luminal_x(2.0 * std::numbers::pi * k.C, +1, k);
    // wavelength 1 m, period 1/C
    // two wavelengths of window; the time step is half the light-crossing
    // step so the two truncation terms cannot cancel for luminal waves
    std::array<double, 3> norms{};
    for (int level = 0; level < 3; ++level) {
        const std::size_t ppw = 64u << level;
        const std::size_t n = ppw * 2 + 1;
        const double dx = 2.0 / static_cast<double>(n - 1);
        const GridGeometry g{n, n, dx / (2.0 * k.C), dx, 0.0, 0.0};
        norms[level] = transformed_residual_norm(wave, v, kind, g, k);
    }
    return norms;
}

}  // namespace

TEST_SUITE("wave_covariance") {

TEST_CASE("sample_field fills exact analytic values") {
    const auto constant = sample_field([](double, double) { return 1.0; },
                                       square_grid(8, 1.0, 1.0));
    for (double v : constant.values) CHECK(v == 1.0);

    const GridGeometry g{6, 6, 0.25, 0.25, 0.0, 2.0};
    const auto parabola =
        sample_field([](double, double x) { return (x - 2.0) * (x - 2.0); }, g);
    for (std::size_t i = 0; i < parabola.nt; ++i)
        for (std::size_t j = 0; j < parabola.nx; ++j) {
            const double x = parabola.pos_of(j) - 2.0;
            CHECK(parabola.at(i, j) == x * x);
        }

    const PlaneWave w = PlaneWave::luminal_x(2.0 * std::numbers::pi * si.C, +1, si);
    const auto field = sample_field(plane_wave_field(w), square_grid(16, 1.0 / si.C, 1.0));
    CHECK(rel_err(field.at(0, 0), 1.0) < 1e-12);  // cos(0)

    CHECK_THROWS_AS(sample_field([](double, double) { return 0.0; },
                                 GridGeometry{0, 0, 1.0, 1.0, 0.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(sample_field([](double, double) { return 0.0; },
                                 GridGeometry{4, 8, 1.0, 1.0, 0.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("d'Alembertian residual of simple fields") {
    const auto constant = sample_field([](double, double) { return 3.0; },
                                       square_grid(8, 1.0, 1.0));
    CHECK(dalembertian_residual(constant, nat).l2_norm == 0.0);

    // quadratic in x: central stencil is exact, residual == 2 everywhere
    const GridGeometry g{8, 8, 0.25, 0.25, 0.0, 0.0};
    const auto parabola = sample_field([](double, double x) { return x * x; }, g);
    const auto res = dalembertian_residual(parabola, nat);
    for (double r : res.grid.values) CHECK(rel_err(r, 2.0) < 1e-9);
    CHECK(rel_err(res.l2_norm, 2.0) < 1e-9);

    // dyadic affine field: exact zero
    const auto affine = sample_field(
        [](double t, double x) { return 1.0 + 2.0 * x + 4.0 * t; }, g);
    CHECK(dalembertian_residual(affine, nat).l2_norm == 0.0);

    FieldGrid tiny{{}, 3, 3, 0.1, 0.1, 0.0, 0.0};
    tiny.values.resize(9, 0.0);
    CHECK_THROWS_AS(dalembertian_residual(tiny, nat), std::domain_error);
}

TEST_CASE("random affine fields are flat to rounding") {
    auto gen = testutil::rng(10);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    const GridGeometry g{16, 16, 0.013, 0.029, -1.0, 2.0};
    for (int i = 0; i < 50; ++i) {
        const double a = coef(gen), b = coef(gen), c = coef(gen);
        const auto field = sample_field(
            [a, b, c](double t, double x) { return a + b * x + c * t; }, g);
        // cancellation noise only: values ~O(10), dx^2 ~ 1e-3
        CHECK(dalembertian_residual(field, nat).l2_norm < 1e-9);
    }
}

TEST_CASE("residual truncation order is two on a smooth luminal wave") {
    const auto norms = refinement_norms(TransformKind::lorentz, 0.0, si);
    const double order1 = std::log2(norms[0] / norms[1]);
    const double order2 = std::log2(norms[1] / norms[2]);
    CHECK(order1 > 1.8);
    CHECK(order1 < 2.2);
    CHECK(order2 > 1.8);
    CHECK(order2 < 2.2);
}

TEST_CASE("covariance comparison at v = 0 gives identical norms") {
    const PlaneWave wave = PlaneWave::luminal_x(2.0 * std::numbers::pi * si.C, +1, si);
    const auto g = square_grid(65, 1.0 / si.C, 1.0);
    const auto cmp = covariance_comparison(wave, 0.0, g, si);
    CHECK(cmp.lorentz == cmp.voigt);
    CHECK(cmp.lorentz == cmp.galilean);
    CHECK(cmp.lorentz > 0.0);
}

TEST_CASE("lorentz and voigt preserve the wave equation, galilean does not") {
    const double v = 0.5 * si.C;
    const auto lorentz = refinement_norms(TransformKind::lorentz, v, si);
    const auto voigt = refinement_norms(TransformKind::voigt, v, si);
    const auto galilean = refinement_norms(TransformKind::galilean, v, si);

    // invariant transforms: second-order decay toward zero
    for (const auto& norms : {lorentz, voigt}) {
        const double order = std::log2(norms[1] / norms[2]);
        CHECK(order > 1.8);
        CHECK(order < 2.2);
    }
    // galilean: converges to a nonzero constant instead
    CHECK(rel_err(galilean[2], galilean[1]) < 0.05);
    CHECK(galilean[2] > 0.0);
    CHECK(galilean[2] / lorentz[2] >= 100.0);
}

TEST_CASE("galilean residual is bounded away from zero from 0.1C up") {
    for (double beta : {0.1, 0.25, 0.5}) {
        const auto norms = refinement_norms(TransformKind::galilean, beta * si.C, si);
        CHECK(rel_err(norms[2], norms[1]) < 0.05);  // settled to its constant
        CHECK(norms[2] > 0.1);
    }
}

TEST_CASE("plane wave transform: identity, doppler factor, null condition") {
    const PlaneWave wave = PlaneWave::luminal_x(1.0e15, +1, si);
    const auto rest = kinematics::Boost::from_velocity(0.0, si);
    const PlaneWave same = transform_plane_wave(wave, rest, si);
    CHECK(rel_err(same.omega, wave.omega) < 1e-15);
    CHECK(rel_err(same.k.x, wave.k.x) < 1e-15);

    // receding observer at beta = 0.6 sees half the frequency
    const auto b = kinematics::Boost::from_velocity(0.6 * si.C, si);
    const PlaneWave red = transform_plane_wave(wave, b, si);
    CHECK(rel_err(red.omega, 0.5 * wave.omega) < 1e-12);
    CHECK(red.is_luminal(si));
}

TEST_CASE("phase of a plane wave is invariant under boosting") {
    auto gen = testutil::rng(11);
    std::uniform_real_distribution<double> beta(-0.95, 0.95);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> logw(12.0, 16.0);
    for (int i = 0; i < 10000; ++i) {
        const double omega = std::pow(10.0, logw(gen));
        Vec3 khat{unit(gen), unit(gen), unit(gen)};
        if (khat.norm() == 0.0) continue;
        khat = khat / khat.norm();
        const PlaneWave wave{khat * (omega / si.C), omega, 1.0, unit(gen)};

        const auto b = kinematics::Boost::from_velocity(beta(gen) * si.C, si);
        const kinematics::Event ev{unit(gen) * 1e-6, unit(gen) * 100.0,
                                   unit(gen) * 100.0, unit(gen) * 100.0};
        const PlaneWave moved = transform_plane_wave(wave, b, si);
        const kinematics::Event evp = kinematics::lorentz_boost(ev, b, si);
        const double phase = wave.phase_at(ev);
        const double phase_p = moved.phase_at(evp);
        CHECK(std::abs(phase_p - phase) <= 1e-10 * (std::abs(phase) + 1.0));
        CHECK(moved.is_luminal(si, 1e-10));
    }
}

TEST_CASE("acoustic doppler") {
    CHECK(acoustic_doppler(440.0, 0.0, 0.0, 343.0) == 440.0);
    CHECK(rel_err(acoustic_doppler(440.0, 343.0 / 2.0, 0.0, 343.0), 880.0) < 1e-15);

    // moving source and moving observer are not equivalent for sound
    const double c_s = 343.0;
    const double u = 0.1 * c_s;
    const double source_moving = acoustic_doppler(1.0, u, 0.0, c_s);
    const double observer_moving = acoustic_doppler(1.0, 0.0, u, c_s);
    CHECK(std::abs(source_moving - observer_moving) > 1e-3);
    // while the light factor sqrt((1+b)/(1-b)) sits between the two
    const double light = std::sqrt((1.0 + 0.1) / (1.0 - 0.1));
    CHECK(light > observer_moving);
    CHECK(light < source_moving);

    CHECK_THROWS_AS(acoustic_doppler(1.0, 343.0, 0.0, 343.0), std::domain_error);
    CHECK_THROWS_AS(acoustic_doppler(1.0, 0.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("grid csv export carries the geometry header") {
    const auto g = sample_field([](double t, double x) { return x + t; },
                                square_grid(5, 1.0, 1.0));
    const auto path =
        (std::filesystem::temp_directory_path() / "relwave_grid_test.csv").string();
    write_grid_csv(g, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.find("dt=") == 0);
    CHECK(header.find("nx=5") != std::string::npos);
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 5);
    std::filesystem::remove(path);
}

}  // TEST_SUITE
