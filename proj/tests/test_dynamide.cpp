#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "relwave/dynamide.hpp"
#include "test_helpers.hpp"

using namespace relwave;
using namespace relwave::dynamide;
using std::numbers::pi;
using testutil::rel_err;

namespace {

const PhysicalConstants si = PhysicalConstants::si();
const PhysicalConstants nat = PhysicalConstants::natural();

ChainConfig basic_chain(std::size_t n) {
    ChainConfig cfg;
    cfg.N = n;
    cfg.Theta = 1.0;
    cfg.chi_tilde = 1.0;
    cfg.chi = 2.0;
    cfg.a = 1.0;
    cfg.Omega0 = 1.0;
    cfg.dt = 0.1 / cfg.band_edge();
    cfg.steps = 1;
    return cfg;
}

Mode luminal_mode(double omega, const PhysicalConstants& k) {
    Mode m;
    m.omega = omega;
    m.q = omega / k.C;
    return m;
}

}  // namespace

TEST_SUITE("dynamide") {

TEST_CASE("intra and collective frequencies") {
    CHECK(intra_frequency(1.0, 2.0) == 1.0);
    CHECK(rel_err(intra_frequency(1.0, 1.0), std::sqrt(2.0)) < 1e-15);
    // quadrupling the spring doubles the frequency
    CHECK(rel_err(intra_frequency(4.0, 1.0), 2.0 * intra_frequency(1.0, 1.0)) < 1e-15);

    CHECK(collective_frequency(2.0, 1.0) == 2.0);
    CHECK(rel_err(collective_frequency(1.0, 1.0), std::sqrt(2.0)) < 1e-15);

    // chi = 2 chi_tilde forces the squared ratio to 2
    for (double chi_tilde : {0.5, 1.0, 3.7, 42.0}) {
        const double wt = intra_frequency(chi_tilde, 1.3);
        const double wc = collective_frequency(2.0 * chi_tilde, 1.3);
        CHECK(rel_err(wc * wc / (wt * wt), 2.0) < 4e-16);
    }

    CHECK_THROWS_AS(intra_frequency(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(collective_frequency(1.0, 0.0), std::domain_error);
}

TEST_CASE("theta from the cell relation") {
    // doubling omega quarters Theta
    const double t1 = theta_from_cell(1e-30, 1e16, si);
    const double t2 = theta_from_cell(1e-30, 2e16, si);
    CHECK(rel_err(t1 / t2, 4.0) < 1e-12);

    CHECK(rel_err(t1, 9.228310204342874e-30) < 1e-12);

    // the alternate printed form Theta C^2 = e^2/(4 pi Omega0 q^2 eps0)
    // agrees only when omega = 2 C q; eliminate and check numerically
    const double q = 3.1e7;
    const double omega = 2.0 * si.C * q;
    const double first_form = theta_from_cell(1e-30, omega, si);
    const double second_form =
        si.e * si.e / (4.0 * pi * 1e-30 * q * q * si.eps0 * si.C * si.C);
    CHECK(rel_err(first_form, second_form) < 1e-12);

    CHECK_THROWS_AS(theta_from_cell(0.0, 1e16, si), std::domain_error);
    CHECK_THROWS_AS(theta_from_cell(1e-30, 0.0, si), std::domain_error);
}

TEST_CASE("mode amplitudes close the consistency chain") {
    auto cfg = basic_chain(64);
    cfg.Omega0 = 1e-30;
    const Mode m = luminal_mode(3.7e15, si);

    auto amp = mode_amplitudes(m, cfg, si);
    CHECK(rel_err(amp.E0 / amp.A0, m.omega) < 1e-12);
    CHECK(rel_err(amp.E0 / amp.H0, std::sqrt(si.mu0 / si.eps0)) < 1e-12);
    CHECK(rel_err(amp.E0 / amp.H0, 376.7303134617706) < 1e-12);

    // with Theta from the cell relation, P0/eps0 equals E0
    cfg.Theta = theta_from_cell(cfg.Omega0, m.omega, si);
    amp = mode_amplitudes(m, cfg, si);
    CHECK(rel_err(amp.P0 / si.eps0, amp.E0) < 1e-12);

    Mode bad = m;
    bad.omega = 0.0;
    CHECK_THROWS_AS(mode_amplitudes(bad, cfg, si), std::domain_error);
}

TEST_CASE("amplitude invariants hold across six decades") {
    auto gen = testutil::rng(20);
    std::uniform_real_distribution<double> logw(10.0, 16.0);
    std::uniform_real_distribution<double> logv(-32.0, -26.0);
    std::uniform_int_distribution<std::size_t> cells(2, 1024);
    for (int i = 0; i < 10000; ++i) {
        auto cfg = basic_chain(cells(gen));
        cfg.Omega0 = std::pow(10.0, logv(gen));
        const Mode m = luminal_mode(std::pow(10.0, logw(gen)), si);
        cfg.Theta = theta_from_cell(cfg.Omega0, m.omega, si);
        const auto amp = mode_amplitudes(m, cfg, si);
        CHECK(rel_err(amp.E0 / amp.A0, m.omega) < 1e-12);
        CHECK(rel_err(amp.E0 / amp.H0, std::sqrt(si.mu0 / si.eps0)) < 1e-12);
        CHECK(rel_err(amp.P0 / si.eps0, amp.E0) < 1e-12);
    }
}

TEST_CASE("g2 prefactor ratio") {
    const auto cfg = basic_chain(8);
    CHECK(rel_err(g2_consistency(luminal_mode(2.5e15, si), cfg, si), 1.0) < 1e-12);

    Mode fast = luminal_mode(2.5e15, si);
    fast.omega = 2.0 * si.C * fast.q;
    CHECK(rel_err(g2_consistency(fast, cfg, si), 2.0) < 1e-12);

    Mode slow = luminal_mode(2.5e15, si);
    slow.omega = 0.5 * si.C * slow.q;
    CHECK(rel_err(g2_consistency(slow, cfg, si), 0.5) < 1e-12);
}

TEST_CASE("mode invariants are enforced") {
    const auto cfg = basic_chain(8);
    Mode skewed = luminal_mode(1e15, si);
    skewed.polarization = {0.5, 1.0, 0.0};  // not unit, not perpendicular
    CHECK_THROWS_AS(mode_amplitudes(skewed, cfg, si), std::domain_error);

    Mode tilted = luminal_mode(1e15, si);
    tilted.polarization = {std::sqrt(0.5), std::sqrt(0.5), 0.0};  // unit but not perp
    CHECK_THROWS_AS(mode_amplitudes(tilted, cfg, si), std::domain_error);

    Mode negative = luminal_mode(1e15, si);
    negative.occupation = -1.0;
    CHECK_THROWS_AS(momentum_spectrum({negative}, cfg, si), std::domain_error);
}

TEST_CASE("force decomposition nulls and the triple product") {
    Mode m;
    m.omega = 1.0;
    m.q = 1.0;
    m.direction = {1, 0, 0};
    m.polarization = {0, 1, 0};

    // velocity along the propagation direction kills the first term
    auto f = force_decomposition({2.0, 0.0, 0.0}, m);
    CHECK(f.along_direction.norm() == 0.0);
    CHECK(rel_err(f.along_polarization.norm(), 2.0) < 1e-15);

    // velocity along the polarization kills the second term
    f = force_decomposition({0.0, 3.0, 0.0}, m);
    CHECK(f.along_polarization.norm() == 0.0);
    CHECK(rel_err(f.along_direction.norm(), 3.0) < 1e-15);

    // v = n + I gives both terms unit magnitude
    f = force_decomposition({1.0, 1.0, 0.0}, m);
    CHECK(rel_err(f.along_direction.norm(), 1.0) < 1e-15);
    CHECK(rel_err(f.along_polarization.norm(), 1.0) < 1e-15);
}

TEST_CASE("force decomposition matches the vector triple product") {
    auto gen = testutil::rng(21);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        Vec3 n{unit(gen), unit(gen), unit(gen)};
        if (n.norm() < 1e-3) continue;
        n = n / n.norm();
        Vec3 raw{unit(gen), unit(gen), unit(gen)};
        Vec3 p = raw - n * dot(raw, n);
        if (p.norm() < 1e-3) continue;
        p = p / p.norm();

        Mode m;
        m.omega = 1.0;
        m.direction = n;
        m.polarization = p;
        const Vec3 v{unit(gen), unit(gen), unit(gen)};
        const auto f = force_decomposition(v, m);
        const Vec3 sum = f.along_direction + f.along_polarization;
        const Vec3 bac_cab = cross(v, cross(n, p));
        CHECK((sum - bac_cab).norm() <= 1e-12);
    }
}

TEST_CASE("momentum spectrum") {
    const auto cfg = basic_chain(4);
    CHECK(momentum_spectrum({}, cfg, nat).norm() == 0.0);

    // zero-point half quantum for a single unoccupied mode
    Mode m = luminal_mode(3.7e15, si);
    const Vec3 p = momentum_spectrum({m}, cfg, si);
    const double want = si.hbar * m.omega / (2.0 * cfg.total_volume() * si.C);
    CHECK(rel_err(p.norm(), want) < 1e-12);
    CHECK(p.y == 0.0);

    // opposite directions cancel
    Mode back = m;
    back.direction = {-1, 0, 0};
    CHECK(momentum_spectrum({m, back}, cfg, si).norm() == 0.0);

    // additive over disjoint lists
    Mode other = luminal_mode(1.9e15, si);
    other.occupation = 3.0;
    const Vec3 joint = momentum_spectrum({m, other}, cfg, si);
    const Vec3 split = momentum_spectrum({m}, cfg, si) + momentum_spectrum({other}, cfg, si);
    CHECK((joint - split).norm() <= 1e-15 * joint.norm());

    // homogeneous of degree one in (n + 1/2)
    Mode doubled = m;
    doubled.occupation = 2.0 * m.occupation + 0.5;
    CHECK(rel_err(momentum_spectrum({doubled}, cfg, si).norm(),
                  2.0 * momentum_spectrum({m}, cfg, si).norm()) < 1e-12);
}

TEST_CASE("instantaneous momentum averages to the mean spectrum") {
    const auto cfg = basic_chain(4);
    Mode m = luminal_mode(1.0, nat);
    m.occupation = 2.0;

    const Vec3 mean = momentum_spectrum({m}, cfg, nat);
    Vec3 accum{};
    const int samples = 4096;
    const double period = 2.0 * pi / m.omega;
    for (int i = 0; i < samples; ++i) {
        const double t = period * static_cast<double>(i) / samples;
        accum += momentum_spectrum_instantaneous({m}, cfg, nat, t, {});
    }
    accum = accum / static_cast<double>(samples);
    CHECK(rel_err(accum.x, mean.x) < 1e-10);

    // at t = 0, r = 0 the beat term rides on top of the mean
    const Vec3 peak = momentum_spectrum_instantaneous({m}, cfg, nat, 0.0, {});
    const double want =
        nat.hbar * m.omega / (2.0 * cfg.total_volume() * nat.C) * (2.0 * 2.0 + 1.0 + 2.0 * 2.0);
    CHECK(rel_err(peak.x, want) < 1e-12);
}

TEST_CASE("photon cross section") {
    CHECK(rel_err(photon_cross_section(1.0, nat), pi) < 1e-15);
    CHECK(rel_err(photon_cross_section(1.0, nat) / photon_cross_section(2.0, nat), 4.0) <
          1e-15);
    CHECK(rel_err(photon_cross_section(3.7e15, si), 2.0624709035028254e-14) < 1e-12);
    CHECK_THROWS_AS(photon_cross_section(0.0, si), std::domain_error);
}

TEST_CASE("analytic dispersion is even and monotone") {
    const auto cfg = basic_chain(64);
    for (int i = 1; i <= 32; ++i) {
        const double q = mode_wavevector(cfg, static_cast<std::size_t>(i));
        CHECK(dispersion_omega(cfg, q) == dispersion_omega(cfg, -q));
        CHECK(dispersion_omega(cfg, q) > dispersion_omega(cfg, mode_wavevector(cfg, i - 1)));
    }
    CHECK(rel_err(dispersion_omega(cfg, 0.0), intra_frequency(cfg.chi_tilde, cfg.Theta)) <
          1e-15);
    CHECK(rel_err(dispersion_omega(cfg, pi / cfg.a), cfg.band_edge()) < 1e-15);
}

TEST_CASE("spectral peak finder recovers a pure tone") {
    const double omega = 1.37;
    const double dt = 0.05;
    std::vector<double> samples(4096);
    for (std::size_t i = 0; i < samples.size(); ++i)
        samples[i] = std::sin(omega * dt * static_cast<double>(i) + 0.3);
    CHECK(rel_err(dominant_angular_frequency(samples, dt), omega) < 1e-3);
    CHECK_THROWS_AS(dominant_angular_frequency({1.0, 2.0}, dt), std::domain_error);
}

TEST_CASE("chain at rest stays at rest") {
    auto cfg = basic_chain(8);
    cfg.steps = 200;
    const auto result = simulate_chain(
        cfg, ChainInitial::profile(std::vector<double>(8, 0.0), std::vector<double>(8, 0.0)),
        {1}, 50);
    for (const auto& snap : result.displacements)
        for (double u : snap) CHECK(u == 0.0);
    CHECK(result.energy_drift == 0.0);
    CHECK(result.dispersion.at(0).omega_measured == 0.0);
}

TEST_CASE("excited normal mode lands on the analytic dispersion") {
    auto cfg = basic_chain(32);
    cfg.steps = 1 << 14;
    const auto result = simulate_chain(cfg, ChainInitial::single_mode(3, 0.01));
    REQUIRE(result.dispersion.size() == 1);
    const auto& d = result.dispersion[0];
    CHECK(rel_err(d.omega_measured, d.omega_analytic) < 0.01);
    CHECK(result.energy_drift < 1e-9);
}

TEST_CASE("measured dispersion is even in q") {
    auto cfg = basic_chain(16);
    cfg.steps = 1 << 13;
    // mode 13 of 16 aliases to -q of mode 3; both projections must ring at
    // the same frequency
    const auto result = simulate_chain(cfg, ChainInitial::single_mode(3, 0.01), {3, 13});
    REQUIRE(result.dispersion.size() == 2);
    CHECK(rel_err(result.dispersion[0].omega_measured,
                  result.dispersion[1].omega_measured) < 1e-6);
    CHECK(rel_err(result.dispersion[0].omega_analytic,
                  result.dispersion[1].omega_analytic) < 1e-12);
}

TEST_CASE("two-cell chain reproduces the 2x2 eigenfrequencies") {
    auto cfg = basic_chain(2);
    cfg.steps = 1 << 14;
    // analytic eigenvalues of the 2x2 dynamical matrix
    const double w_sym = std::sqrt(2.0 * cfg.chi_tilde / cfg.Theta);
    const double w_anti = std::sqrt((2.0 * cfg.chi_tilde + 4.0 * cfg.chi) / cfg.Theta);

    auto symmetric = simulate_chain(cfg, ChainInitial::single_mode(0, 0.01), {0});
    CHECK(rel_err(symmetric.dispersion[0].omega_measured, w_sym) < 0.01);

    auto anti = simulate_chain(cfg, ChainInitial::single_mode(1, 0.01), {1});
    CHECK(rel_err(anti.dispersion[0].omega_measured, w_anti) < 0.01);
    CHECK(rel_err(anti.dispersion[0].omega_analytic, w_anti) < 1e-12);
}

TEST_CASE("seeded random profiles reproduce bitwise") {
    auto cfg = basic_chain(16);
    cfg.steps = 500;
    cfg.seed = 1234;
    const auto a = simulate_chain(cfg, ChainInitial::random(0.1), {1, 2}, 100);
    const auto b = simulate_chain(cfg, ChainInitial::random(0.1), {1, 2}, 100);
    REQUIRE(a.displacements.size() == b.displacements.size());
    for (std::size_t s = 0; s < a.displacements.size(); ++s)
        for (std::size_t j = 0; j < cfg.N; ++j)
            CHECK(a.displacements[s][j] == b.displacements[s][j]);
    CHECK(a.dispersion[0].omega_measured == b.dispersion[0].omega_measured);
}

TEST_CASE("chain preconditions") {
    auto cfg = basic_chain(8);
    cfg.steps = 10;
    cfg.dt = 2.1 / cfg.band_edge();  // unstable
    CHECK_THROWS_AS(simulate_chain(cfg, ChainInitial::single_mode(1)), std::domain_error);

    cfg = basic_chain(1);
    cfg.steps = 10;
    CHECK_THROWS_AS(simulate_chain(cfg, ChainInitial::single_mode(0)), std::domain_error);

    cfg = basic_chain(8);
    cfg.steps = 10;
    CHECK_THROWS_AS(simulate_chain(cfg, ChainInitial::single_mode(9)), std::domain_error);
    CHECK_THROWS_AS(
        simulate_chain(cfg, ChainInitial::profile({1.0, 2.0}, {0.0, 0.0})),
        std::domain_error);
}

TEST_CASE("trajectory and dispersion csv exports") {
    auto cfg = basic_chain(4);
    cfg.steps = 64;
    const auto result = simulate_chain(cfg, ChainInitial::single_mode(1, 0.5), {}, 16);
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path();
    const auto traj = (dir / "relwave_traj_test.csv").string();
    const auto disp = (dir / "relwave_disp_test.csv").string();
    write_trajectory_csv(result, traj);
    write_dispersion_csv(result, disp);

    std::ifstream tin(traj);
    std::string line;
    std::getline(tin, line);
    CHECK(line == "step,site,displacement[m],velocity[m/s]");
    std::size_t rows = 0;
    while (std::getline(tin, line)) ++rows;
    CHECK(rows == result.snapshot_steps.size() * cfg.N);

    std::ifstream din(disp);
    std::getline(din, line);
    CHECK(line == "q[rad/m],omega_analytic[rad/s],omega_measured[rad/s]");
    fs::remove(traj);
    fs::remove(disp);
}

}  // TEST_SUITE
