#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relwave/constants.hpp"
#include "relwave/optics.hpp"

namespace relwave::interferometer {

/// Which picture the arm traversal times are computed in.
enum class KinematicsModel { galilean_ether, lorentz, galilean_with_contraction };

/// Two equal arms at right angles; arm 1 sits at `orientation` radians from
/// the ether wind, arm 2 at orientation + pi/2.
struct Config {
    double arm_length = 0.0;    ///< m
    double wavelength = 0.0;    ///< m
    double ether_speed = 0.0;   ///< m/s, 0 <= v < C
    double orientation = 0.0;   ///< rad
    KinematicsModel kinematics = KinematicsModel::lorentz;

    void validate(const PhysicalConstants& k) const;
};

/// Mirror hit times in the apparatus rest frame: both semi-waves reflect at
/// l/C and recombine at 2l/C.
struct RestFrameSchedule {
    double t1a;
    double t2a;
    double t1b;
    double t2b;
};

RestFrameSchedule rest_frame_schedule(double l, const PhysicalConstants& k);

struct ArmTimes {
    double t_parallel;       ///< round trip along arm 1
    double t_perpendicular;  ///< round trip along arm 2
};

/// Round-trip traversal times under the configured kinematics. In the
/// Galilean ether picture an arm at angle theta to the wind takes
/// 2 l sqrt(C^2 - v^2 sin^2 theta) / (C^2 - v^2); contracting the along-wind
/// projection by 1/gamma equalises the arms, and the Lorentz picture gives
/// 2l/C for both.
ArmTimes ether_arm_times(const Config& cfg, const PhysicalConstants& k);

/// Fringe shift on rotating the apparatus by 90 degrees:
/// C (dt(orientation) - dt(orientation + 90deg)) / lambda with
/// dt = t_parallel - t_perpendicular. Positive when arm 1 is the longer
/// optical path.
double rotation_fringe_shift(const Config& cfg, const PhysicalConstants& k);

/// Closed contour with a moving fluid: each beam passes two tubes of length
/// tube_length, one always with the flow and one always against it.
struct FizeauConfig {
    double tube_length = 0.0;     ///< m, per tube
    double fluid_velocity = 0.0;  ///< m/s
    optics::Medium medium;
    double wavelength = 0.0;      ///< m

    void validate(const PhysicalConstants& k) const;  // |v| < C/n
};

struct FizeauResult {
    double u_co;       ///< lab speed of the co-flow beam, m/s
    double u_counter;  ///< lab speed of the counter-flow beam, m/s
    double delta_t;    ///< path-time difference, s
    double shift;      ///< fringes
};

/// Fringe shift from exact dragged-light speeds (relativistic composition);
/// agrees with the first-order value 4 L v (n^2 - 1)/(C lambda) to O(v/C).
FizeauResult fizeau_fringe_shift(const FizeauConfig& cfg, const PhysicalConstants& k);

struct OrientationSample {
    double angle_rad;
    double delta_t_s;
    double fringe_shift;
};

/// Uniform sweep of `count` orientations over [0, 2 pi).
std::vector<OrientationSample> orientation_sweep(const Config& cfg, std::size_t count,
                                                 const PhysicalConstants& k);

void write_orientation_csv(const std::vector<OrientationSample>& sweep,
                           const std::string& path);

}  // namespace relwave::interferometer
