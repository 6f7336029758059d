#include "relwave/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "relwave/dynamide.hpp"
#include "relwave/interferometer.hpp"
#include "relwave/io_util.hpp"
#include "relwave/kinematics.hpp"
#include "relwave/optics.hpp"
#include "relwave/version.hpp"
#include "relwave/wave_covariance.hpp"

namespace relwave::scenario {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

/// Typed access to the parameter map. Tracks which keys were consumed so the
/// strict unknown-key check can name the offender.
class Params {
public:
    Params(const Scenario& s, const PhysicalConstants& k) : s_(s), k_(k) {}

    bool has(const std::string& key) const { return s_.parameters.count(key) > 0; }

    double number(const std::string& key) {
        auto it = s_.parameters.find(key);
        if (it == s_.parameters.end())
            throw ValidationError("missing required parameter '" + key + "' for kind '" +
                                  s_.kind + "'");
        return to_number(key, it->second);
    }

    double number_or(const std::string& key, double fallback) {
        auto it = s_.parameters.find(key);
        if (it == s_.parameters.end()) return fallback;
        used_.push_back(key);
        return to_number(key, it->second);
    }

    std::uint64_t count(const std::string& key) {
        const double v = number(key);
        return to_count(key, v);
    }

    std::uint64_t count_or(const std::string& key, std::uint64_t fallback) {
        if (!has(key)) return fallback;
        return to_count(key, number(key));
    }

    std::string text_or(const std::string& key, const std::string& fallback) {
        auto it = s_.parameters.find(key);
        if (it == s_.parameters.end()) return fallback;
        used_.push_back(key);
        return it->second;
    }

    bool flag_or(const std::string& key, bool fallback) {
        auto it = s_.parameters.find(key);
        if (it == s_.parameters.end()) return fallback;
        used_.push_back(key);
        if (it->second == "true" || it->second == "1") return true;
        if (it->second == "false" || it->second == "0") return false;
        throw ValidationError("parameter '" + key + "' must be true or false, got '" +
                              it->second + "'");
    }

    std::vector<std::uint64_t> count_list_or(const std::string& key) {
        auto it = s_.parameters.find(key);
        if (it == s_.parameters.end()) return {};
        used_.push_back(key);
        std::vector<std::uint64_t> values;
        std::stringstream ss(it->second);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            piece = trim(piece);
            if (piece.empty()) continue;
            values.push_back(to_count(key, to_number(key, piece)));
        }
        return values;
    }

    double subluminal(const std::string& key) {
        const double v = number(key);
        if (!(std::abs(v) < k_.C))
            throw ValidationError("parameter '" + key + "' must satisfy |" + key + "| < C");
        return v;
    }

    double positive(const std::string& key) {
        const double v = number(key);
        if (!(v > 0.0))
            throw ValidationError("parameter '" + key + "' must be positive");
        return v;
    }

    double positive_or(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        return positive(key);
    }

    double non_negative(const std::string& key) {
        const double v = number(key);
        if (!(v >= 0.0))
            throw ValidationError("parameter '" + key + "' must be non-negative");
        return v;
    }

    double non_negative_or(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        return non_negative(key);
    }

    /// Strict mode: every key present must have been consumed.
    void reject_unknown() const {
        for (const auto& [key, value] : s_.parameters) {
            if (std::find(used_.begin(), used_.end(), key) == used_.end())
                throw ValidationError("unknown parameter '" + key + "' for kind '" +
                                      s_.kind + "'");
        }
    }

    const PhysicalConstants& constants() const { return k_; }

private:
    double to_number(const std::string& key, const std::string& text) {
        const std::string t = trim(text);
        if (t.empty())
            throw ValidationError("parameter '" + key + "' has an empty value");
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size() || !std::isfinite(v))
            throw ValidationError("parameter '" + key + "' must be a finite number, got '" +
                                  t + "'");
        if (std::find(used_.begin(), used_.end(), key) == used_.end()) used_.push_back(key);
        return v;
    }

    std::uint64_t to_count(const std::string& key, double v) {
        if (!(v >= 0.0) || v != std::floor(v) || v > 1e15)
            throw ValidationError("parameter '" + key + "' must be a non-negative integer");
        return static_cast<std::uint64_t>(v);
    }

    const Scenario& s_;
    const PhysicalConstants& k_;
    mutable std::vector<std::string> used_;
};

const std::map<std::string, KindSpec>& kind_table() {
    static const std::map<std::string, KindSpec> table = {
        {"boost", {{"v"}, {"t", "x", "y", "z"}}},
        {"compose", {{"v"}, {"ux", "uy", "uz"}}},
        {"dilation", {{"v", "dt", "l"}, {}}},
        {"muon", {{"tau0", "gamma", "depth"}, {"half_life"}}},
        {"covariance",
         {{"v"}, {"wavelength", "levels", "base_points", "periods", "grid_out"}}},
        {"chain",
         {{"N", "chi_tilde", "chi", "steps"},
          {"theta", "a", "omega0", "dt", "initial", "mode", "amplitude", "measure",
           "snapshot_every", "trajectory_out", "dispersion_out"}}},
        {"amplitudes",
         {{"omega"}, {"N", "omega0", "theta", "occupation", "q", "vx", "vy", "vz"}}},
        {"dispersion",
         {{"omega_c", "density", "mass", "tau", "omega_min", "omega_max", "count"},
          {"sweep_out"}}},
        {"drag", {{"v", "n"}, {"mu"}}},
        {"transition", {{"omega12", "r12"}, {"photon_count", "direction"}}},
        {"michelson",
         {{"l", "lambda", "v"}, {"orientation", "kinematics", "sweep", "sweep_out"}}},
        {"fizeau", {{"L", "v", "n", "lambda"}, {"mu"}}},
    };
    return table;
}

std::string constants_profile(const PhysicalConstants& k) {
    if (k.C == 299792458.0) return "si";
    if (k.C == 1.0) return "natural";
    return "custom";
}

ResultTable make_table(const Scenario& s, const PhysicalConstants& k) {
    ResultTable table;
    table.metadata["kind"] = s.kind;
    table.metadata["version"] = relwave::version;
    table.metadata["constants"] = constants_profile(k);
    table.metadata["C"] = io::format_double(k.C);
    table.metadata["seed"] = std::to_string(s.seed);
    table.metadata["source"] = s.source;
    table.metadata["scenario"] = s.raw_text;
    return table;
}

// --- kind handlers ---------------------------------------------------------

ResultTable run_boost(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    const double v = p.subluminal("v");
    const kinematics::Event ev{p.number_or("t", 0.0), p.number_or("x", 0.0),
                               p.number_or("y", 0.0), p.number_or("z", 0.0)};
    p.reject_unknown();
    if (dry_run) return {};

    const auto b = kinematics::Boost::from_velocity(v, k);
    const auto out = kinematics::lorentz_boost(ev, b, k);
    const auto phase = kinematics::simultaneity_phase_velocity(v, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"v", "m/s"},       {"gamma", "1"},   {"rapidity", "1"},
                     {"t_prime", "s"},   {"x_prime", "m"}, {"y_prime", "m"},
                     {"z_prime", "m"},   {"simultaneity_speed", "m/s"}};
    table.rows.push_back({Value::num(v), Value::num(b.gamma), Value::num(b.rapidity),
                          Value::num(out.t), Value::num(out.x), Value::num(out.y),
                          Value::num(out.z),
                          phase.is_infinite ? Value::infinite() : Value::num(phase.value)});
    return table;
}

ResultTable run_compose(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    const double v = p.subluminal("v");
    const Vec3 u{p.number_or("ux", 0.0), p.number_or("uy", 0.0), p.number_or("uz", 0.0)};
    if (u.norm() > k.C * (1.0 + 1e-12))
        throw ValidationError("parameters (ux,uy,uz) must satisfy |u| <= C");
    p.reject_unknown();
    if (dry_run) return {};

    const Vec3 out = kinematics::compose_velocities(u, v, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"ux_prime", "m/s"}, {"uy_prime", "m/s"}, {"uz_prime", "m/s"},
                     {"speed", "m/s"}};
    table.rows.push_back({Value::num(out.x), Value::num(out.y), Value::num(out.z),
                          Value::num(out.norm())});
    return table;
}

ResultTable run_dilation(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    const double v = p.subluminal("v");
    const double dt = p.positive("dt");
    const double l = p.positive("l");
    p.reject_unknown();
    if (dry_run) return {};

    const auto intervals = kinematics::time_dilation_pair(dt, v, k);
    const auto lengths = kinematics::length_contraction_pair(l, v, k);
    const double gamma = kinematics::gamma_factor(v, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"gamma", "1"},        {"dilated", "s"},
                     {"contracted", "s"},   {"interval_product", "s^2"},
                     {"tilde_l", "m"},      {"bar_l", "m"},
                     {"length_product", "m^2"}};
    table.rows.push_back({Value::num(gamma), Value::num(intervals.dilated),
                          Value::num(intervals.contracted),
                          Value::num(intervals.dilated * intervals.contracted),
                          Value::num(lengths.tilde_l), Value::num(lengths.bar_l),
                          Value::num(lengths.tilde_l * lengths.bar_l)});
    return table;
}

ResultTable run_muon(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    const double tau0 = p.positive("tau0");
    const double gamma = p.number("gamma");
    if (!(gamma >= 1.0)) throw ValidationError("parameter 'gamma' must be >= 1");
    const double depth = p.non_negative("depth");
    const bool half_life = p.flag_or("half_life", false);
    p.reject_unknown();
    if (dry_run) return {};

    const auto out = kinematics::muon_penetration(tau0, gamma, depth, k, half_life);

    ResultTable table = make_table(s, k);
    table.columns = {{"rest_length", "m"}, {"boosted_length", "m"},
                     {"surviving_fraction", "1"}};
    table.rows.push_back({Value::num(out.rest_length), Value::num(out.boosted_length),
                          Value::num(out.surviving_fraction)});
    return table;
}

ResultTable run_covariance(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    const double v = p.subluminal("v");
    const double wavelength = p.positive_or("wavelength", 1.0);
    const std::uint64_t levels = p.count_or("levels", 3);
    const std::uint64_t base_points = p.count_or("base_points", 64);
    const std::uint64_t periods = p.count_or("periods", 2);
    const std::string grid_out = p.text_or("grid_out", "");
    if (levels < 1 || levels > 6)
        throw ValidationError("parameter 'levels' must be between 1 and 6");
    if (base_points < 8)
        throw ValidationError("parameter 'base_points' must be at least 8");
    if (periods < 1) throw ValidationError("parameter 'periods' must be at least 1");
    p.reject_unknown();
    if (dry_run) return {};

    const double omega = 2.0 * std::numbers::pi * k.C / wavelength;
    const auto wave = waves::PlaneWave::luminal_x(omega, +1, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"level", "1"},          {"points_per_wavelength", "1"},
                     {"dx", "m"},             {"lorentz_norm", "1/m^2"},
                     {"voigt_norm", "1/m^2"}, {"galilean_norm", "1/m^2"}};
    for (std::uint64_t level = 0; level < levels; ++level) {
        const std::uint64_t ppw = base_points << level;
        const std::uint64_t n = ppw * periods + 1;
        const double dx =
            wavelength * static_cast<double>(periods) / static_cast<double>(n - 1);
        // half the light-crossing step in time, so luminal truncation terms
        // cannot cancel between the two second differences
        const waves::GridGeometry geom{n, n, dx / (2.0 * k.C), dx, 0.0, 0.0};
        const auto cmp = waves::covariance_comparison(wave, v, geom, k);
        table.rows.push_back({Value::num(static_cast<double>(level)),
                              Value::num(static_cast<double>(ppw)), Value::num(geom.dx),
                              Value::num(cmp.lorentz), Value::num(cmp.voigt),
                              Value::num(cmp.galilean)});
        if (!grid_out.empty() && level + 1 == levels) {
            const auto grid = waves::sample_field(waves::plane_wave_field(wave), geom);
            const auto res = waves::dalembertian_residual(grid, k);
            waves::write_grid_csv(res.grid, grid_out);
        }
    }
    return table;
}

dynamide::ChainConfig chain_config_from(Params& p, const Scenario& s) {
    dynamide::ChainConfig cfg;
    cfg.N = p.count("N");
    if (cfg.N < 2) throw ValidationError("parameter 'N' must be at least 2");
    cfg.chi_tilde = p.positive("chi_tilde");
    cfg.chi = p.positive("chi");
    cfg.Theta = p.positive_or("theta", 1.0);
    cfg.a = p.positive_or("a", 1.0);
    cfg.Omega0 = p.positive_or("omega0", 1.0);
    cfg.steps = p.count("steps");
    if (cfg.steps < 1) throw ValidationError("parameter 'steps' must be at least 1");
    cfg.dt = p.positive_or("dt", 0.1 / cfg.band_edge());
    cfg.seed = s.seed;
    return cfg;
}

ResultTable run_chain(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    auto cfg = chain_config_from(p, s);
    const std::string initial = p.text_or("initial", "mode");
    if (initial != "mode" && initial != "random")
        throw ValidationError("parameter 'initial' must be mode or random");
    const std::uint64_t mode = p.count_or("mode", 1);
    if (mode >= cfg.N) throw ValidationError("parameter 'mode' must be below N");
    const double amplitude = p.positive_or("amplitude", 1.0);
    auto measure = p.count_list_or("measure");
    for (auto m : measure)
        if (m >= cfg.N) throw ValidationError("parameter 'measure' has an index >= N");
    const std::uint64_t snapshot_every = p.count_or("snapshot_every", 0);
    const std::string trajectory_out = p.text_or("trajectory_out", "");
    const std::string dispersion_out = p.text_or("dispersion_out", "");
    p.reject_unknown();
    if (dry_run) return {};

    std::vector<std::size_t> measure_idx(measure.begin(), measure.end());
    if (measure_idx.empty()) measure_idx.push_back(mode);
    const auto result = dynamide::simulate_chain(
        cfg,
        initial == "random" ? dynamide::ChainInitial::random(amplitude)
                            : dynamide::ChainInitial::single_mode(mode, amplitude),
        measure_idx,
        trajectory_out.empty() ? snapshot_every
                               : (snapshot_every ? snapshot_every : cfg.steps / 32 + 1));

    ResultTable table = make_table(s, k);
    table.columns = {{"q", "rad/m"}, {"omega_analytic", "rad/s"},
                     {"omega_measured", "rad/s"}, {"rel_error", "1"}};
    for (const auto& d : result.dispersion) {
        const double rel =
            d.omega_analytic > 0.0
                ? std::abs(d.omega_measured - d.omega_analytic) / d.omega_analytic
                : 0.0;
        table.rows.push_back({Value::num(d.q), Value::num(d.omega_analytic),
                              Value::num(d.omega_measured), Value::num(rel)});
    }
    table.metadata["energy_drift"] = io::format_double(result.energy_drift);
    table.metadata["initial_energy"] = io::format_double(result.initial_energy);
    table.metadata["omega_intra"] =
        io::format_double(dynamide::intra_frequency(cfg.chi_tilde, cfg.Theta));
    table.metadata["omega_collective"] =
        io::format_double(dynamide::collective_frequency(cfg.chi, cfg.Theta));
    table.metadata["band_edge"] = io::format_double(cfg.band_edge());

    if (!trajectory_out.empty()) dynamide::write_trajectory_csv(result, trajectory_out);
    if (!dispersion_out.empty()) dynamide::write_dispersion_csv(result, dispersion_out);
    return table;
}

ResultTable run_amplitudes(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    dynamide::ChainConfig cfg;
    cfg.N = p.count_or("N", 64);
    if (cfg.N < 2) throw ValidationError("parameter 'N' must be at least 2");
    cfg.Omega0 = p.positive_or("omega0", 1e-30);
    const double omega = p.positive("omega");
    cfg.Theta = p.has("theta") ? p.positive("theta") : dynamide::theta_from_cell(cfg.Omega0, omega, k);
    cfg.chi_tilde = cfg.Theta * omega * omega / 2.0;  // consistent lattice stiffness
    cfg.chi = 2.0 * cfg.chi_tilde;
    cfg.a = 1.0;
    cfg.dt = 0.1 / cfg.band_edge();
    cfg.steps = 1;

    dynamide::Mode mode;
    mode.omega = omega;
    mode.q = p.positive_or("q", omega / k.C);
    mode.occupation = p.non_negative_or("occupation", 0.0);

    const bool has_charge =
        p.has("vx") || p.has("vy") || p.has("vz");
    const Vec3 v_charge{p.number_or("vx", 0.0), p.number_or("vy", 0.0),
                        p.number_or("vz", 0.0)};
    p.reject_unknown();
    if (dry_run) return {};

    const auto amp = dynamide::mode_amplitudes(mode, cfg, k);
    const double g2 = dynamide::g2_consistency(mode, cfg, k);
    const Vec3 momentum = dynamide::momentum_spectrum({mode}, cfg, k);
    const double sigma = dynamide::photon_cross_section(omega, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"P0", "C/m^2"},   {"E0", "V/m"},
                     {"A0", "V*s/m"},   {"H0", "A/m"},
                     {"impedance", "ohm"}, {"g2_ratio", "1"},
                     {"momentum_density", "kg/(m^2*s)"}, {"cross_section", "m^2"}};
    std::vector<Value> row = {Value::num(amp.P0),       Value::num(amp.E0),
                              Value::num(amp.A0),       Value::num(amp.H0),
                              Value::num(amp.E0 / amp.H0), Value::num(g2),
                              Value::num(momentum.norm()), Value::num(sigma)};
    if (has_charge) {
        const auto force = dynamide::force_decomposition(v_charge, mode);
        table.columns.insert(table.columns.end(),
                             {{"force_dir_x", "m/s"}, {"force_dir_y", "m/s"},
                              {"force_dir_z", "m/s"}, {"force_pol_x", "m/s"},
                              {"force_pol_y", "m/s"}, {"force_pol_z", "m/s"}});
        row.insert(row.end(),
                   {Value::num(force.along_direction.x), Value::num(force.along_direction.y),
                    Value::num(force.along_direction.z), Value::num(force.along_polarization.x),
                    Value::num(force.along_polarization.y), Value::num(force.along_polarization.z)});
    }
    table.rows.push_back(std::move(row));
    return table;
}

ResultTable run_dispersion(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    optics::ResonanceParams params;
    params.oscillator_density = p.non_negative("density");
    params.omega_c = p.non_negative("omega_c");
    params.m_osc = p.positive("mass");
    params.tau_damp = p.non_negative("tau");
    const double omega_min = p.positive("omega_min");
    const double omega_max = p.positive("omega_max");
    if (!(omega_max > omega_min))
        throw ValidationError("parameter 'omega_max' must exceed omega_min");
    const std::uint64_t count = p.count("count");
    if (count < 2) throw ValidationError("parameter 'count' must be at least 2");
    const std::string sweep_out = p.text_or("sweep_out", "");
    p.reject_unknown();
    if (dry_run) return {};

    const auto sweep = optics::dispersion_sweep(params, omega_min, omega_max, count, k);
    if (!sweep_out.empty()) optics::write_sweep_csv(sweep, sweep_out);

    ResultTable table = make_table(s, k);
    table.columns = {{"omega", "rad/s"}, {"epsilon", "1"}, {"n", "1"},
                     {"phase_velocity", "m/s"}};
    for (const auto& pt : sweep)
        table.rows.push_back({Value::num(pt.omega), Value::num(pt.epsilon),
                              Value::num(pt.n), Value::num(pt.phase_velocity)});
    return table;
}

ResultTable run_drag(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    const double v = p.subluminal("v");
    const double n = p.number("n");
    if (!(n >= 1.0)) throw ValidationError("parameter 'n' must be >= 1");
    const double mu = p.positive_or("mu", 1.0);
    p.reject_unknown();
    if (dry_run) return {};

    const auto drag = optics::fresnel_drag(optics::Medium::from_index(n, mu), v, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"drag_coefficient", "1"}, {"approx", "m/s"}, {"exact", "m/s"},
                     {"difference", "m/s"}};
    table.rows.push_back({Value::num(drag.drag_coefficient), Value::num(drag.approx),
                          Value::num(drag.exact), Value::num(drag.exact - drag.approx)});
    return table;
}

ResultTable run_transition(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    optics::Transition t;
    t.omega12 = p.positive("omega12");
    t.r12 = p.non_negative("r12");
    t.photon_count = p.non_negative_or("photon_count", 0.0);
    const std::string dir_text = p.text_or("direction", "emission");
    optics::RadiativeDirection dir;
    if (dir_text == "emission") dir = optics::RadiativeDirection::emission;
    else if (dir_text == "absorption") dir = optics::RadiativeDirection::absorption;
    else
        throw ValidationError("parameter 'direction' must be emission or absorption");
    p.reject_unknown();
    if (dry_run) return {};

    const auto rate = optics::transition_rate(t, dir, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"P12", "1/s"}, {"intensity", "W"}, {"lifetime", "s"}};
    table.rows.push_back({Value::num(rate.P12), Value::num(rate.intensity),
                          rate.P12 > 0.0 ? Value::num(1.0 / rate.P12) : Value::infinite()});
    return table;
}

interferometer::KinematicsModel parse_kinematics(const std::string& text) {
    if (text == "galilean_ether") return interferometer::KinematicsModel::galilean_ether;
    if (text == "lorentz") return interferometer::KinematicsModel::lorentz;
    if (text == "galilean_with_contraction")
        return interferometer::KinematicsModel::galilean_with_contraction;
    throw ValidationError(
        "parameter 'kinematics' must be galilean_ether, lorentz or "
        "galilean_with_contraction");
}

ResultTable run_michelson(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    interferometer::Config cfg;
    cfg.arm_length = p.positive("l");
    cfg.wavelength = p.positive("lambda");
    cfg.ether_speed = p.number("v");
    if (!(cfg.ether_speed >= 0.0) || !(cfg.ether_speed < k.C))
        throw ValidationError("parameter 'v' must satisfy 0 <= v < C");
    cfg.orientation = p.number_or("orientation", 0.0);
    cfg.kinematics = parse_kinematics(p.text_or("kinematics", "galilean_ether"));
    const std::uint64_t sweep = p.count_or("sweep", 1);
    if (sweep < 1) throw ValidationError("parameter 'sweep' must be at least 1");
    const std::string sweep_out = p.text_or("sweep_out", "");
    p.reject_unknown();
    if (dry_run) return {};

    ResultTable table = make_table(s, k);
    table.columns = {{"orientation", "rad"}, {"t_parallel", "s"},
                     {"t_perpendicular", "s"}, {"delta_t", "s"}, {"fringe_shift", "1"}};

    const auto samples = interferometer::orientation_sweep(cfg, sweep, k);
    for (const auto& sample : samples) {
        interferometer::Config rotated = cfg;
        rotated.orientation = sample.angle_rad;
        const auto times = interferometer::ether_arm_times(rotated, k);
        table.rows.push_back({Value::num(sample.angle_rad), Value::num(times.t_parallel),
                              Value::num(times.t_perpendicular),
                              Value::num(sample.delta_t_s),
                              Value::num(sample.fringe_shift)});
    }
    if (!sweep_out.empty()) interferometer::write_orientation_csv(samples, sweep_out);
    return table;
}

ResultTable run_fizeau(const Scenario& s, Params& p, bool dry_run) {
    const auto& k = p.constants();
    interferometer::FizeauConfig cfg;
    cfg.tube_length = p.positive("L");
    const double n = p.number("n");
    if (!(n >= 1.0)) throw ValidationError("parameter 'n' must be >= 1");
    cfg.medium = optics::Medium::from_index(n, p.positive_or("mu", 1.0));
    cfg.wavelength = p.positive("lambda");
    cfg.fluid_velocity = p.number("v");
    if (!(std::abs(cfg.fluid_velocity) < k.C / cfg.medium.n))
        throw ValidationError("parameter 'v' must be below C/n, the in-medium light speed");
    p.reject_unknown();
    if (dry_run) return {};

    const auto result = interferometer::fizeau_fringe_shift(cfg, k);

    ResultTable table = make_table(s, k);
    table.columns = {{"u_co", "m/s"}, {"u_counter", "m/s"}, {"delta_t", "s"},
                     {"fringe_shift", "1"}};
    table.rows.push_back({Value::num(result.u_co), Value::num(result.u_counter),
                          Value::num(result.delta_t), Value::num(result.shift)});
    return table;
}

using Handler = ResultTable (*)(const Scenario&, Params&, bool);

const std::map<std::string, Handler>& handler_table() {
    static const std::map<std::string, Handler> table = {
        {"boost", run_boost},         {"compose", run_compose},
        {"dilation", run_dilation},   {"muon", run_muon},
        {"covariance", run_covariance}, {"chain", run_chain},
        {"amplitudes", run_amplitudes}, {"dispersion", run_dispersion},
        {"drag", run_drag},           {"transition", run_transition},
        {"michelson", run_michelson}, {"fizeau", run_fizeau},
    };
    return table;
}

}  // namespace

std::vector<std::string> known_kinds() {
    std::vector<std::string> kinds;
    for (const auto& [kind, spec] : kind_table()) kinds.push_back(kind);
    return kinds;
}

KindSpec kind_spec(const std::string& kind) {
    auto it = kind_table().find(kind);
    if (it == kind_table().end())
        throw ValidationError("unknown scenario kind '" + kind + "'");
    return it->second;
}

Scenario parse_scenario_text(const std::string& text, const std::string& source_name) {
    Scenario s;
    s.raw_text = text;
    s.source = source_name;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_any = false;
    std::map<std::string, std::string> raw;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value' on line " + std::to_string(line_no),
                             line_no);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ParseError("empty key on line " + std::to_string(line_no), line_no);
        if (raw.count(key))
            throw ParseError("duplicate key '" + key + "' on line " + std::to_string(line_no),
                             line_no);
        raw[key] = value;
        saw_any = true;
    }
    if (!saw_any) throw ParseError("scenario file has no key = value lines", 0);

    auto kind_it = raw.find("kind");
    if (kind_it == raw.end()) throw ParseError("scenario is missing the 'kind' key", 0);
    s.kind = kind_it->second;
    raw.erase(kind_it);

    if (auto it = raw.find("seed"); it != raw.end()) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(it->second.c_str(), &end, 10);
        if (end != it->second.c_str() + it->second.size())
            throw ParseError("seed must be a non-negative integer", 0);
        s.seed = v;
        raw.erase(it);
    }
    if (auto it = raw.find("out"); it != raw.end()) {
        s.output_path = it->second;
        raw.erase(it);
    }
    s.parameters = std::move(raw);
    return s;
}

Scenario parse_scenario(const std::string& path) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec))
        throw IoError("scenario path is a directory: " + path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading scenario file: " + path);
    return parse_scenario_text(buf.str(), path);
}

void validate_scenario(const Scenario& s, const PhysicalConstants& k) {
    k.validate();
    auto it = handler_table().find(s.kind);
    if (it == handler_table().end())
        throw ValidationError("unknown scenario kind '" + s.kind + "'");
    Params params(s, k);
    it->second(s, params, true);
}

ResultTable run_scenario(const Scenario& s, const PhysicalConstants& k) {
    k.validate();
    auto it = handler_table().find(s.kind);
    if (it == handler_table().end())
        throw ValidationError("unknown scenario kind '" + s.kind + "'");
    Params params(s, k);
    return it->second(s, params, false);
}

std::string render(const ResultTable& table, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out += ',';
            out += io::csv_escape(table.columns[c].name + "[" + table.columns[c].unit + "]");
        }
        out += '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                out += row[c].is_infinite ? "inf" : io::format_double(row[c].number);
            }
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json j;
    j["metadata"] = table.metadata;
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& col : table.columns)
        j["columns"].push_back({{"name", col.name}, {"unit", col.unit}});
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (cell.is_infinite)
                jrow.push_back("inf");
            else if (std::isnan(cell.number))
                jrow.push_back(nullptr);
            else
                jrow.push_back(cell.number);
        }
        j["rows"].push_back(std::move(jrow));
    }
    return j.dump(2) + "\n";
}

void emit(const ResultTable& table, OutputFormat format, const std::string& path) {
    const std::string text = render(table, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output path: " + path);
    out << text;
    if (!out) throw IoError("failed writing output path: " + path);
}

std::vector<std::vector<Value>> parse_json_rows(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    std::vector<std::vector<Value>> rows;
    for (const auto& jrow : j.at("rows")) {
        std::vector<Value> row;
        for (const auto& cell : jrow) {
            if (cell.is_string() && cell.get<std::string>() == "inf")
                row.push_back(Value::infinite());
            else if (cell.is_null())
                row.push_back(Value::num(std::nan("")));
            else
                row.push_back(Value::num(cell.get<double>()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace relwave::scenario
