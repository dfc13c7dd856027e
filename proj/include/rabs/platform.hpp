// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Platform taxonomy: power profiles, batteries, per-kind feasibility regions
// (tether ball, laser charging ball, lamppost grid) and the small physical
// side models (gripper force, payload-endurance, rotor noise decay).

#ifndef RABS_PLATFORM_HPP_
#define RABS_PLATFORM_HPP_

#include <array>
#include <variant>

#include "rabs/geometry.hpp"
#include "rabs/scenario.hpp"

namespace rabs {

struct PowerProfile {
  double hover_w{170.0};
  double fly_w{162.0};
  double comm_w{2.0};
  double grasp_w{5.0};  // 0 for an energy-neutral gripper
};

struct Battery {
  double capacity_mah{6700.0};
  double nominal_v{14.8};
  double energy_wh() const { return capacity_mah * nominal_v / 1000.0; }
};

struct HoveringKind {
  double altitude_m{100.0};
};

struct TetheredKind {
  Point2 anchor{0.0, 0.0};
  double cable_m{150.0};
  double altitude_m{100.0};
};

struct LaserPoweredKind {
  Point2 director{0.0, 0.0};
  double laser_tx_w{800.0};
  double altitude_m{100.0};
};

struct RabsKind {
  SiteGrid grid;
};

struct MicroBsKind {
  SiteGrid sites;
};

using PlatformKind =
    std::variant<HoveringKind, TetheredKind, LaserPoweredKind, RabsKind, MicroBsKind>;

// Laser power-balance model: delivered power is
// conversion_eff * laser_tx_w * exp(-attenuation_per_m * distance).
struct LaserLinkParams {
  double conversion_eff{0.25};
  double attenuation_per_m{1e-4};
};

struct GripperSpec {
  double friction_coeff{0.1};
  double safety_factor{2.0};
  double gravity_mps2{9.8};
};

// Where a platform may place itself horizontally.
struct WholeArea {};
using FeasibleRegion = std::variant<WholeArea, Disk, SiteGrid>;

// Hovering roams the whole area; tethered and laser-powered kinds are bound
// to the disk their cable / critical charging distance projects onto the
// ground plane; RABS and micro BS pick from the site grid. Throws
// InfeasibleError when the cable or charging range cannot reach the
// operating altitude. laser_demand_w is the power the airborne platform must
// harvest (hover + comm for a serving ABS).
FeasibleRegion feasible_horizontal_region(const PlatformKind& kind,
                                          const LaserLinkParams& laser_link = {},
                                          double laser_demand_w = 172.0);

// Largest distance at which the harvested laser power still covers demand_w:
// d_c = ln(eff * tx / demand) / attenuation. Returns +inf when attenuation
// is zero and the link is feasible; throws InfeasibleError when
// eff * tx < demand_w.
double critical_charging_distance_m(double laser_tx_w, const LaserLinkParams& link,
                                    double demand_w);

// Static friction-grip force to hang a platform of the given mass:
// F = safety_factor * m * g / friction_coeff.
double gripper_holding_force_n(double mass_kg, const GripperSpec& spec);

// Two (mass, endurance) anchor points that pin the linear propulsion power
// model P(m); defaults are the DJI Matrice 300 RTK figures.
struct EnduranceCalibration {
  double mass1_kg{6.3};
  double minutes1{55.0};
  double mass2_kg{9.0};
  double minutes2{31.0};
};

struct Endurance {
  double minutes{0.0};
  bool extrapolated{false};  // mass outside the calibrated range
};

// Propulsion power interpolated linearly through P(m_i) = E_batt / t_i.
double propulsion_power_w(double total_mass_kg, const Battery& battery,
                          const EnduranceCalibration& calib);

// energy / P(m). Throws std::domain_error when P(m) <= 0.
Endurance flight_endurance(double total_mass_kg, const Battery& battery,
                           const EnduranceCalibration& calib = {});

// Free-field decay: 6 dB per doubling of distance
// (L = ref - 20*log10(d / d_ref)).
double noise_at_distance_db(double ref_level_db, double ref_distance_m, double distance_m);

// Measured noise emission of a DJI Matrice 600 Pro (Alexander & Whelchel,
// Flyover noise measurements, 2019). Distances in meters, level in dB.
struct NoiseMeasurement {
  const char* status;
  double altitude_m;
  double lateral_m;
  double noise_db;
};

inline constexpr std::array<NoiseMeasurement, 10> kMatrice600ProNoise{{
    {"Hovering", 9.18, 0.0, 89.6},
    {"Hovering", 9.18, 2.45, 88.7},
    {"Hovering", 9.18, 5.28, 87.3},
    {"Hovering", 9.18, 9.14, 83.7},
    {"Hovering", 9.18, 15.84, 79.2},
    {"Flying (3.23 m/s)", 7.5, 0.0, 85.3},
    {"Flying (3.23 m/s)", 7.5, 2.45, 84.0},
    {"Flying (3.23 m/s)", 7.5, 5.28, 82.7},
    {"Flying (3.23 m/s)", 7.5, 9.14, 79.6},
    {"Flying (3.23 m/s)", 7.5, 15.84, 75.9},
}};

}  // namespace rabs

#endif  // RABS_PLATFORM_HPP_
