#include "relwave/interferometer.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "relwave/errors.hpp"
#include "relwave/io_util.hpp"
#include "relwave/kinematics.hpp"

namespace relwave::interferometer {

using std::numbers::pi;

void Config::validate(const PhysicalConstants& k) const {
    if (!(arm_length > 0.0)) throw std::domain_error("arm length must be positive");
    if (!(wavelength > 0.0)) throw std::domain_error("wavelength must be positive");
    if (!(ether_speed >= 0.0) || !(ether_speed < k.C))
        throw std::domain_error("ether speed must satisfy 0 <= v < C");
}

RestFrameSchedule rest_frame_schedule(double l, const PhysicalConstants& k) {
    if (l < 0.0) throw std::domain_error("arm length must be non-negative");
    const double one_way = l / k.C;
    return {one_way, 2.0 * one_way, one_way, 2.0 * one_way};
}

namespace {

// Galilean round trip for an arm at angle theta to the wind.
double galilean_round_trip(double l, double v, double theta, const PhysicalConstants& k) {
    const double c2 = k.C * k.C;
    const double s = std::sin(theta);
    return 2.0 * l * std::sqrt(c2 - v * v * s * s) / (c2 - v * v);
}

double arm_time(const Config& cfg, double theta, const PhysicalConstants& k) {
    switch (cfg.kinematics) {
        case KinematicsModel::galilean_ether:
            return galilean_round_trip(cfg.arm_length, cfg.ether_speed, theta, k);
        case KinematicsModel::galilean_with_contraction: {
            // along-wind projection contracted by 1/gamma; the round trip
            // collapses to (2l/C) gamma independent of theta
            const double g = kinematics::gamma_factor(cfg.ether_speed, k);
            return 2.0 * cfg.arm_length * g / k.C;
        }
        case KinematicsModel::lorentz:
            return 2.0 * cfg.arm_length / k.C;
    }
    throw std::logic_error("unreachable kinematics model");
}

double arm_time_difference(const Config& cfg, double orientation,
                           const PhysicalConstants& k) {
    return arm_time(cfg, orientation, k) - arm_time(cfg, orientation + pi / 2.0, k);
}

}  // namespace

ArmTimes ether_arm_times(const Config& cfg, const PhysicalConstants& k) {
    cfg.validate(k);
    return {arm_time(cfg, cfg.orientation, k),
            arm_time(cfg, cfg.orientation + pi / 2.0, k)};
}

double rotation_fringe_shift(const Config& cfg, const PhysicalConstants& k) {
    cfg.validate(k);
    const double before = arm_time_difference(cfg, cfg.orientation, k);
    const double after = arm_time_difference(cfg, cfg.orientation + pi / 2.0, k);
    return k.C * (before - after) / cfg.wavelength;
}

void FizeauConfig::validate(const PhysicalConstants& k) const {
    medium.validate();
    if (!(tube_length > 0.0)) throw std::domain_error("tube length must be positive");
    if (!(wavelength > 0.0)) throw std::domain_error("wavelength must be positive");
    if (!(std::abs(fluid_velocity) < k.C / medium.n))
        throw std::domain_error("fluid must be slower than light in the medium");
}

FizeauResult fizeau_fringe_shift(const FizeauConfig& cfg, const PhysicalConstants& k) {
    cfg.validate(k);
    const double in_medium = k.C / cfg.medium.n;
    // Lab speeds: composing with a frame at -v carries the beam along the
    // flow, +v against it.
    const double u_co =
        kinematics::compose_velocities({in_medium, 0.0, 0.0}, -cfg.fluid_velocity, k).x;
    const double u_counter =
        kinematics::compose_velocities({in_medium, 0.0, 0.0}, cfg.fluid_velocity, k).x;
    const double path = 2.0 * cfg.tube_length;  // two tube passes per beam
    const double delta_t = path / u_counter - path / u_co;
    return {u_co, u_counter, delta_t, k.C * delta_t / cfg.wavelength};
}

std::vector<OrientationSample> orientation_sweep(const Config& cfg, std::size_t count,
                                                 const PhysicalConstants& k) {
    cfg.validate(k);
    if (count == 0) throw std::domain_error("sweep needs at least one orientation");
    std::vector<OrientationSample> sweep;
    sweep.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Config rotated = cfg;
        rotated.orientation =
            cfg.orientation + 2.0 * pi * static_cast<double>(i) / static_cast<double>(count);
        sweep.push_back({rotated.orientation, arm_time_difference(rotated, rotated.orientation, k),
                         rotation_fringe_shift(rotated, k)});
    }
    return sweep;
}

void write_orientation_csv(const std::vector<OrientationSample>& sweep,
                           const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "angle_rad[rad],delta_t_s[s],fringe_shift[1]\n";
    for (const OrientationSample& s : sweep)
        out << io::format_double(s.angle_rad) << ',' << io::format_double(s.delta_t_s)
            << ',' << io::format_double(s.fringe_shift) << "\n";
}

}  // namespace relwave::interferometer
