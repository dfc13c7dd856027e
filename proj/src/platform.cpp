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

#include "rabs/platform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rabs/errors.hpp"

namespace rabs {

namespace {

// Horizontal reach of a ball of radius range_m around a ground point for a
// platform operating at altitude_m.
double horizontal_reach_m(double range_m, double altitude_m, const char* what) {
  if (range_m < altitude_m) {
    throw InfeasibleError(std::string(what) + ": platform cannot reach operating altitude");
  }
  if (std::isinf(range_m)) return range_m;
  return std::sqrt(range_m * range_m - altitude_m * altitude_m);
}

}  // namespace

FeasibleRegion feasible_horizontal_region(const PlatformKind& kind,
                                          const LaserLinkParams& laser_link,
                                          double laser_demand_w) {
  return std::visit(
      [&](const auto& k) -> FeasibleRegion {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, HoveringKind>) {
          return WholeArea{};
        } else if constexpr (std::is_same_v<K, TetheredKind>) {
          return Disk{k.anchor, horizontal_reach_m(k.cable_m, k.altitude_m, "tether")};
        } else if constexpr (std::is_same_v<K, LaserPoweredKind>) {
          const double d_c =
              critical_charging_distance_m(k.laser_tx_w, laser_link, laser_demand_w);
          return Disk{k.director, horizontal_reach_m(d_c, k.altitude_m, "laser")};
        } else if constexpr (std::is_same_v<K, RabsKind>) {
          return k.grid;
        } else {
          return k.sites;
        }
      },
      kind);
}

double critical_charging_distance_m(double laser_tx_w, const LaserLinkParams& link,
                                    double demand_w) {
  if (!(demand_w > 0.0)) {
    throw std::invalid_argument("laser demand power must be positive");
  }
  if (!(link.conversion_eff > 0.0) || link.conversion_eff > 1.0 ||
      link.attenuation_per_m < 0.0) {
    throw ConfigError("laser link parameters out of range");
  }
  const double delivered_at_zero = link.conversion_eff * laser_tx_w;
  if (delivered_at_zero < demand_w) {
    throw InfeasibleError("laser cannot sustain the platform even at zero distance");
  }
  if (link.attenuation_per_m == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return std::log(delivered_at_zero / demand_w) / link.attenuation_per_m;
}

double gripper_holding_force_n(double mass_kg, const GripperSpec& spec) {
  if (mass_kg < 0.0) throw std::invalid_argument("mass must be non-negative");
  if (!(spec.friction_coeff > 0.0) || !(spec.safety_factor >= 1.0)) {
    throw ConfigError("gripper spec out of range");
  }
  return spec.safety_factor * mass_kg * spec.gravity_mps2 / spec.friction_coeff;
}

double propulsion_power_w(double total_mass_kg, const Battery& battery,
                          const EnduranceCalibration& calib) {
  const double energy_wh = battery.energy_wh();
  if (!(energy_wh > 0.0)) throw ConfigError("battery energy must be positive");
  if (calib.mass1_kg == calib.mass2_kg) {
    throw ConfigError("endurance calibration needs two distinct mass anchors");
  }
  const double p1 = energy_wh / (calib.minutes1 / 60.0);
  const double p2 = energy_wh / (calib.minutes2 / 60.0);
  const double slope = (p2 - p1) / (calib.mass2_kg - calib.mass1_kg);
  return p1 + slope * (total_mass_kg - calib.mass1_kg);
}

Endurance flight_endurance(double total_mass_kg, const Battery& battery,
                           const EnduranceCalibration& calib) {
  const double power_w = propulsion_power_w(total_mass_kg, battery, calib);
  if (!(power_w > 0.0)) {
    throw std::domain_error("propulsion power model non-positive at this mass");
  }
  const double lo = std::min(calib.mass1_kg, calib.mass2_kg);
  const double hi = std::max(calib.mass1_kg, calib.mass2_kg);
  Endurance e;
  e.minutes = battery.energy_wh() / power_w * 60.0;
  e.extrapolated = total_mass_kg < lo || total_mass_kg > hi;
  return e;
}

double noise_at_distance_db(double ref_level_db, double ref_distance_m, double distance_m) {
  if (!(ref_distance_m > 0.0) || !(distance_m > 0.0)) {
    throw std::invalid_argument("noise model distances must be positive");
  }
  return ref_level_db - 20.0 * std::log10(distance_m / ref_distance_m);
}

}  // namespace rabs
