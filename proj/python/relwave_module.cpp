#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "relwave/constants.hpp"
#include "relwave/dynamide.hpp"
#include "relwave/interferometer.hpp"
#include "relwave/kinematics.hpp"
#include "relwave/optics.hpp"
#include "relwave/version.hpp"
#include "relwave/wave_covariance.hpp"

namespace py = pybind11;
using namespace relwave;

namespace {

Vec3 to_vec3(const std::tuple<double, double, double>& t) {
    return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

std::tuple<double, double, double> from_vec3(const Vec3& v) {
    return {v.x, v.y, v.z};
}

}  // namespace

PYBIND11_MODULE(relwave, m) {
    m.doc() = "Deterministic numerical laboratory: relativistic kinematics, wave-equation "
              "covariance checks, a polarizable vacuum lattice, dielectric dispersion and "
              "light drag, and classic interferometry scenarios.";
    m.attr("__version__") = version;

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def_static("si", &PhysicalConstants::si)
        .def_static("natural", &PhysicalConstants::natural)
        .def_readonly("C", &PhysicalConstants::C)
        .def_readonly("e", &PhysicalConstants::e)
        .def_readonly("eps0", &PhysicalConstants::eps0)
        .def_readonly("mu0", &PhysicalConstants::mu0)
        .def_readonly("hbar", &PhysicalConstants::hbar);

    // kinematics ------------------------------------------------------------
    py::class_<kinematics::Event>(m, "Event")
        .def(py::init<double, double, double, double>(), py::arg("t") = 0.0,
             py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("t", &kinematics::Event::t)
        .def_readwrite("x", &kinematics::Event::x)
        .def_readwrite("y", &kinematics::Event::y)
        .def_readwrite("z", &kinematics::Event::z);

    py::class_<kinematics::Boost>(m, "Boost")
        .def_static("from_velocity", &kinematics::Boost::from_velocity, py::arg("v"),
                    py::arg("constants"))
        .def_readonly("v", &kinematics::Boost::v)
        .def_readonly("gamma", &kinematics::Boost::gamma)
        .def_readonly("rapidity", &kinematics::Boost::rapidity);

    py::class_<kinematics::IntervalPair>(m, "IntervalPair")
        .def_readonly("dilated", &kinematics::IntervalPair::dilated)
        .def_readonly("contracted", &kinematics::IntervalPair::contracted)
        .def_readonly("proper", &kinematics::IntervalPair::proper);

    py::class_<kinematics::LengthPair>(m, "LengthPair")
        .def_readonly("tilde_l", &kinematics::LengthPair::tilde_l)
        .def_readonly("bar_l", &kinematics::LengthPair::bar_l)
        .def_readonly("rest", &kinematics::LengthPair::rest);

    py::class_<kinematics::MuonPenetration>(m, "MuonPenetration")
        .def_readonly("rest_length", &kinematics::MuonPenetration::rest_length)
        .def_readonly("boosted_length", &kinematics::MuonPenetration::boosted_length)
        .def_readonly("surviving_fraction", &kinematics::MuonPenetration::surviving_fraction);

    m.def("gamma_factor", &kinematics::gamma_factor, py::arg("v"), py::arg("constants"));
    m.def("rapidity_of", &kinematics::rapidity_of, py::arg("v"), py::arg("constants"));
    m.def("lorentz_boost", &kinematics::lorentz_boost, py::arg("event"), py::arg("boost"),
          py::arg("constants"));
    m.def("voigt_transform", &kinematics::voigt_transform, py::arg("event"), py::arg("v"),
          py::arg("constants"));
    m.def(
        "compose_velocities",
        [](const std::tuple<double, double, double>& u, double v,
           const PhysicalConstants& k) {
            return from_vec3(kinematics::compose_velocities(to_vec3(u), v, k));
        },
        py::arg("u"), py::arg("v"), py::arg("constants"));
    m.def("time_dilation_pair", &kinematics::time_dilation_pair, py::arg("dt"),
          py::arg("v"), py::arg("constants"));
    m.def("length_contraction_pair", &kinematics::length_contraction_pair, py::arg("l"),
          py::arg("v"), py::arg("constants"));
    m.def(
        "simultaneity_phase_velocity",
        [](double v, const PhysicalConstants& k) {
            const auto s = kinematics::simultaneity_phase_velocity(v, k);
            return s.is_infinite ? std::numeric_limits<double>::infinity() : s.value;
        },
        py::arg("v"), py::arg("constants"));
    m.def("muon_penetration", &kinematics::muon_penetration, py::arg("tau0"),
          py::arg("gamma"), py::arg("depth"), py::arg("constants"),
          py::arg("half_life") = false);
    m.def("invariant_interval", &kinematics::invariant_interval, py::arg("event"),
          py::arg("constants"));

    // wave covariance ---------------------------------------------------------
    py::class_<waves::PlaneWave>(m, "PlaneWave")
        .def(py::init([](const std::tuple<double, double, double>& k, double omega,
                         double amplitude, double phase0) {
                 return waves::PlaneWave{to_vec3(k), omega, amplitude, phase0};
             }),
             py::arg("k"), py::arg("omega"), py::arg("amplitude") = 1.0,
             py::arg("phase0") = 0.0)
        .def_static("luminal_x", &waves::PlaneWave::luminal_x, py::arg("omega"),
                    py::arg("direction"), py::arg("constants"))
        .def_property_readonly(
            "k", [](const waves::PlaneWave& w) { return from_vec3(w.k); })
        .def_readonly("omega", &waves::PlaneWave::omega)
        .def_readonly("amplitude", &waves::PlaneWave::amplitude)
        .def_readonly("phase0", &waves::PlaneWave::phase0)
        .def("is_luminal", &waves::PlaneWave::is_luminal, py::arg("constants"),
             py::arg("rel_tol") = 1e-12)
        .def("phase_at", &waves::PlaneWave::phase_at, py::arg("event"));

    py::class_<waves::GridGeometry>(m, "GridGeometry")
        .def(py::init([](std::size_t nt, std::size_t nx, double dt, double dx, double t0,
                         double x0) {
                 return waves::GridGeometry{nt, nx, dt, dx, t0, x0};
             }),
             py::arg("nt"), py::arg("nx"), py::arg("dt"), py::arg("dx"),
             py::arg("t0") = 0.0, py::arg("x0") = 0.0);

    py::enum_<waves::TransformKind>(m, "TransformKind")
        .value("lorentz", waves::TransformKind::lorentz)
        .value("voigt", waves::TransformKind::voigt)
        .value("galilean", waves::TransformKind::galilean);

    m.def("transformed_residual_norm", &waves::transformed_residual_norm, py::arg("wave"),
          py::arg("v"), py::arg("kind"), py::arg("geometry"), py::arg("constants"));
    m.def(
        "covariance_comparison",
        [](const waves::PlaneWave& w, double v, const waves::GridGeometry& g,
           const PhysicalConstants& k) {
            const auto c = waves::covariance_comparison(w, v, g, k);
            return std::make_tuple(c.lorentz, c.voigt, c.galilean);
        },
        py::arg("wave"), py::arg("v"), py::arg("geometry"), py::arg("constants"));
    m.def("transform_plane_wave", &waves::transform_plane_wave, py::arg("wave"),
          py::arg("boost"), py::arg("constants"));
    m.def("acoustic_doppler", &waves::acoustic_doppler, py::arg("f"),
          py::arg("v_source"), py::arg("v_observer"), py::arg("c_sound"));

    // dynamide lattice --------------------------------------------------------
    py::class_<dynamide::ChainConfig>(m, "ChainConfig")
        .def(py::init([](std::size_t N, double Theta, double chi_tilde, double chi,
                         double a, double Omega0, double dt, std::size_t steps,
                         std::uint64_t seed) {
                 dynamide::ChainConfig cfg;
                 cfg.N = N;
                 cfg.Theta = Theta;
                 cfg.chi_tilde = chi_tilde;
                 cfg.chi = chi;
                 cfg.a = a;
                 cfg.Omega0 = Omega0;
                 cfg.dt = dt;
                 cfg.steps = steps;
                 cfg.seed = seed;
                 return cfg;
             }),
             py::arg("N"), py::arg("Theta") = 1.0, py::arg("chi_tilde") = 1.0,
             py::arg("chi") = 2.0, py::arg("a") = 1.0, py::arg("Omega0") = 1.0,
             py::arg("dt") = 0.0, py::arg("steps") = 0, py::arg("seed") = 0)
        .def_readwrite("N", &dynamide::ChainConfig::N)
        .def_readwrite("Theta", &dynamide::ChainConfig::Theta)
        .def_readwrite("chi_tilde", &dynamide::ChainConfig::chi_tilde)
        .def_readwrite("chi", &dynamide::ChainConfig::chi)
        .def_readwrite("a", &dynamide::ChainConfig::a)
        .def_readwrite("Omega0", &dynamide::ChainConfig::Omega0)
        .def_readwrite("dt", &dynamide::ChainConfig::dt)
        .def_readwrite("steps", &dynamide::ChainConfig::steps)
        .def_readwrite("seed", &dynamide::ChainConfig::seed)
        .def("band_edge", &dynamide::ChainConfig::band_edge)
        .def("total_volume", &dynamide::ChainConfig::total_volume);

    py::class_<dynamide::Mode>(m, "Mode")
        .def(py::init([](double q, double omega, double occupation,
                         const std::tuple<double, double, double>& direction,
                         const std::tuple<double, double, double>& polarization) {
                 dynamide::Mode mode;
                 mode.q = q;
                 mode.omega = omega;
                 mode.occupation = occupation;
                 mode.direction = to_vec3(direction);
                 mode.polarization = to_vec3(polarization);
                 return mode;
             }),
             py::arg("q"), py::arg("omega"), py::arg("occupation") = 0.0,
             py::arg("direction") = std::make_tuple(1.0, 0.0, 0.0),
             py::arg("polarization") = std::make_tuple(0.0, 1.0, 0.0))
        .def_readwrite("q", &dynamide::Mode::q)
        .def_readwrite("omega", &dynamide::Mode::omega)
        .def_readwrite("occupation", &dynamide::Mode::occupation);

    py::class_<dynamide::ModeAmplitudes>(m, "ModeAmplitudes")
        .def_readonly("P0", &dynamide::ModeAmplitudes::P0)
        .def_readonly("E0", &dynamide::ModeAmplitudes::E0)
        .def_readonly("A0", &dynamide::ModeAmplitudes::A0)
        .def_readonly("H0", &dynamide::ModeAmplitudes::H0);

    py::class_<dynamide::DispersionPoint>(m, "DispersionPoint")
        .def_readonly("q", &dynamide::DispersionPoint::q)
        .def_readonly("omega_analytic", &dynamide::DispersionPoint::omega_analytic)
        .def_readonly("omega_measured", &dynamide::DispersionPoint::omega_measured);

    py::class_<dynamide::ChainResult>(m, "ChainResult")
        .def_readonly("dispersion", &dynamide::ChainResult::dispersion)
        .def_readonly("initial_energy", &dynamide::ChainResult::initial_energy)
        .def_readonly("energy_drift", &dynamide::ChainResult::energy_drift);

    m.def("intra_frequency", &dynamide::intra_frequency, py::arg("chi_tilde"),
          py::arg("Theta"));
    m.def("collective_frequency", &dynamide::collective_frequency, py::arg("chi"),
          py::arg("Theta"));
    m.def("theta_from_cell", &dynamide::theta_from_cell, py::arg("Omega0"),
          py::arg("omega"), py::arg("constants"));
    m.def("mode_amplitudes", &dynamide::mode_amplitudes, py::arg("mode"),
          py::arg("config"), py::arg("constants"));
    m.def("g2_consistency", &dynamide::g2_consistency, py::arg("mode"), py::arg("config"),
          py::arg("constants"));
    m.def(
        "force_decomposition",
        [](const std::tuple<double, double, double>& v, const dynamide::Mode& mode) {
            const auto f = dynamide::force_decomposition(to_vec3(v), mode);
            return std::make_tuple(from_vec3(f.along_direction),
                                   from_vec3(f.along_polarization));
        },
        py::arg("v_charge"), py::arg("mode"));
    m.def(
        "momentum_spectrum",
        [](const std::vector<dynamide::Mode>& modes, const dynamide::ChainConfig& cfg,
           const PhysicalConstants& k) {
            return from_vec3(dynamide::momentum_spectrum(modes, cfg, k));
        },
        py::arg("modes"), py::arg("config"), py::arg("constants"));
    m.def("photon_cross_section", &dynamide::photon_cross_section, py::arg("omega"),
          py::arg("constants"));
    m.def("dispersion_omega", &dynamide::dispersion_omega, py::arg("config"),
          py::arg("q"));
    m.def(
        "simulate_chain",
        [](const dynamide::ChainConfig& cfg, std::size_t mode_index, double amplitude,
           const std::vector<std::size_t>& measure) {
            return dynamide::simulate_chain(
                cfg, dynamide::ChainInitial::single_mode(mode_index, amplitude), measure);
        },
        py::arg("config"), py::arg("mode_index"), py::arg("amplitude") = 1.0,
        py::arg("measure") = std::vector<std::size_t>{});

    // optics ------------------------------------------------------------------
    py::class_<optics::Medium>(m, "Medium")
        .def_static("from_epsilon_mu", &optics::Medium::from_epsilon_mu,
                    py::arg("epsilon"), py::arg("mu"))
        .def_static("from_index", &optics::Medium::from_index, py::arg("n"),
                    py::arg("mu") = 1.0)
        .def_static("vacuum", &optics::Medium::vacuum)
        .def_readonly("epsilon", &optics::Medium::epsilon)
        .def_readonly("mu", &optics::Medium::mu)
        .def_readonly("n", &optics::Medium::n);

    py::class_<optics::ResonanceParams>(m, "ResonanceParams")
        .def(py::init([](double density, double omega_c, double m_osc, double tau) {
                 return optics::ResonanceParams{density, omega_c, m_osc, tau};
             }),
             py::arg("oscillator_density"), py::arg("omega_c"), py::arg("m_osc"),
             py::arg("tau_damp"))
        .def_readwrite("oscillator_density", &optics::ResonanceParams::oscillator_density)
        .def_readwrite("omega_c", &optics::ResonanceParams::omega_c)
        .def_readwrite("m_osc", &optics::ResonanceParams::m_osc)
        .def_readwrite("tau_damp", &optics::ResonanceParams::tau_damp);

    py::class_<optics::Transition>(m, "Transition")
        .def(py::init([](double omega12, double r12, double photon_count) {
                 return optics::Transition{omega12, r12, photon_count};
             }),
             py::arg("omega12"), py::arg("r12"), py::arg("photon_count") = 0.0)
        .def_readwrite("omega12", &optics::Transition::omega12)
        .def_readwrite("r12", &optics::Transition::r12)
        .def_readwrite("photon_count", &optics::Transition::photon_count);

    py::enum_<optics::RadiativeDirection>(m, "RadiativeDirection")
        .value("emission", optics::RadiativeDirection::emission)
        .value("absorption", optics::RadiativeDirection::absorption);

    py::class_<optics::TransitionRate>(m, "TransitionRate")
        .def_readonly("P12", &optics::TransitionRate::P12)
        .def_readonly("intensity", &optics::TransitionRate::intensity);

    py::class_<optics::FresnelDrag>(m, "FresnelDrag")
        .def_readonly("approx", &optics::FresnelDrag::approx)
        .def_readonly("exact", &optics::FresnelDrag::exact)
        .def_readonly("drag_coefficient", &optics::FresnelDrag::drag_coefficient);

    m.def(
        "epsilon_dispersion",
        [](const std::vector<std::pair<double, double>>& modes,
           const optics::ResonanceParams& params) {
            std::vector<optics::DispersionMode> list;
            list.reserve(modes.size());
            for (const auto& [q, omega] : modes) list.push_back({q, omega});
            return optics::epsilon_dispersion(list, params);
        },
        py::arg("modes"), py::arg("params"));
    m.def("phase_velocity", &optics::phase_velocity, py::arg("medium"),
          py::arg("constants"));
    m.def("fresnel_drag", &optics::fresnel_drag, py::arg("medium"), py::arg("v_medium"),
          py::arg("constants"));
    m.def("transition_rate", &optics::transition_rate, py::arg("transition"),
          py::arg("direction"), py::arg("constants"));

    // interferometer ------------------------------------------------------------
    py::enum_<interferometer::KinematicsModel>(m, "KinematicsModel")
        .value("galilean_ether", interferometer::KinematicsModel::galilean_ether)
        .value("lorentz", interferometer::KinematicsModel::lorentz)
        .value("galilean_with_contraction",
               interferometer::KinematicsModel::galilean_with_contraction);

    py::class_<interferometer::Config>(m, "InterferometerConfig")
        .def(py::init([](double arm_length, double wavelength, double ether_speed,
                         double orientation, interferometer::KinematicsModel kin) {
                 return interferometer::Config{arm_length, wavelength, ether_speed,
                                               orientation, kin};
             }),
             py::arg("arm_length"), py::arg("wavelength"), py::arg("ether_speed"),
             py::arg("orientation") = 0.0,
             py::arg("kinematics") = interferometer::KinematicsModel::lorentz)
        .def_readwrite("arm_length", &interferometer::Config::arm_length)
        .def_readwrite("wavelength", &interferometer::Config::wavelength)
        .def_readwrite("ether_speed", &interferometer::Config::ether_speed)
        .def_readwrite("orientation", &interferometer::Config::orientation)
        .def_readwrite("kinematics", &interferometer::Config::kinematics);

    py::class_<interferometer::ArmTimes>(m, "ArmTimes")
        .def_readonly("t_parallel", &interferometer::ArmTimes::t_parallel)
        .def_readonly("t_perpendicular", &interferometer::ArmTimes::t_perpendicular);

    py::class_<interferometer::RestFrameSchedule>(m, "RestFrameSchedule")
        .def_readonly("t1a", &interferometer::RestFrameSchedule::t1a)
        .def_readonly("t2a", &interferometer::RestFrameSchedule::t2a)
        .def_readonly("t1b", &interferometer::RestFrameSchedule::t1b)
        .def_readonly("t2b", &interferometer::RestFrameSchedule::t2b);

    py::class_<interferometer::FizeauConfig>(m, "FizeauConfig")
        .def(py::init([](double tube_length, double fluid_velocity,
                         const optics::Medium& medium, double wavelength) {
                 return interferometer::FizeauConfig{tube_length, fluid_velocity, medium,
                                                     wavelength};
             }),
             py::arg("tube_length"), py::arg("fluid_velocity"), py::arg("medium"),
             py::arg("wavelength"))
        .def_readwrite("tube_length", &interferometer::FizeauConfig::tube_length)
        .def_readwrite("fluid_velocity", &interferometer::FizeauConfig::fluid_velocity)
        .def_readwrite("wavelength", &interferometer::FizeauConfig::wavelength);

    py::class_<interferometer::FizeauResult>(m, "FizeauResult")
        .def_readonly("u_co", &interferometer::FizeauResult::u_co)
        .def_readonly("u_counter", &interferometer::FizeauResult::u_counter)
        .def_readonly("delta_t", &interferometer::FizeauResult::delta_t)
        .def_readonly("shift", &interferometer::FizeauResult::shift);

    m.def("rest_frame_schedule", &interferometer::rest_frame_schedule, py::arg("l"),
          py::arg("constants"));
    m.def("ether_arm_times", &interferometer::ether_arm_times, py::arg("config"),
          py::arg("constants"));
    m.def("rotation_fringe_shift", &interferometer::rotation_fringe_shift,
          py::arg("config"), py::arg("constants"));
    m.def("fizeau_fringe_shift", &interferometer::fizeau_fringe_shift, py::arg("config"),
          py::arg("constants"));
}
