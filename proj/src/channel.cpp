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

#include "rabs/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rabs/scenario.hpp"

namespace rabs {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double atg_los_probability(double elevation_deg, const AtgParams& p) {
  return 1.0 / (1.0 + p.a * std::exp(-p.b * (elevation_deg - p.a)));
}

double free_space_path_loss_db(double d3d_m, double carrier_hz) {
  return 20.0 * std::log10(4.0 * kPi * carrier_hz * d3d_m / kSpeedOfLight);
}

double atg_mean_path_loss_db(const LinkGeometry& g, const AtgParams& p) {
  if (!(g.d3d_m > 0.0)) {
    throw std::domain_error("air-to-ground path loss undefined at zero distance");
  }
  const double p_los = atg_los_probability(g.elevation_deg, p);
  return free_space_path_loss_db(g.d3d_m, p.carrier_hz) + p_los * p.eta_los_db +
         (1.0 - p_los) * p.eta_nlos_db;
}

double umi_los_probability(double d2d_m) {
  if (d2d_m <= 18.0) return 1.0;
  const double ratio = 18.0 / d2d_m;
  return ratio + std::exp(-d2d_m / 36.0) * (1.0 - ratio);
}

double umi_breakpoint_distance_m(const UmiParams& p) {
  // Effective environment height 1 m (TR 38.901 Table 7.4.1-1, note 1).
  return 4.0 * (p.bs_height_m - 1.0) * (p.ut_height_m - 1.0) * p.carrier_hz / kSpeedOfLight;
}

double umi_mean_path_loss_db(const LinkGeometry& g, const UmiParams& p) {
  if (!(g.d2d_m > 0.0)) {
    throw std::domain_error("UMi path loss undefined at zero horizontal distance");
  }
  const double f_ghz = p.carrier_hz / 1e9;
  const double d_bp = umi_breakpoint_distance_m(p);
  const double dh = p.bs_height_m - p.ut_height_m;

  double pl_los;
  if (g.d2d_m <= d_bp) {
    pl_los = 32.4 + 21.0 * std::log10(g.d3d_m) + 20.0 * std::log10(f_ghz);
  } else {
    pl_los = 32.4 + 40.0 * std::log10(g.d3d_m) + 20.0 * std::log10(f_ghz) -
             9.5 * std::log10(d_bp * d_bp + dh * dh);
  }
  const double pl_nlos_prime = 22.4 + 35.3 * std::log10(g.d3d_m) +
                               21.3 * std::log10(f_ghz) - 0.3 * (p.ut_height_m - 1.5);
  const double pl_nlos = std::max(pl_los, pl_nlos_prime);

  const double p_los = umi_los_probability(g.d2d_m);
  return p_los * pl_los + (1.0 - p_los) * pl_nlos;
}

double shadowed_path_loss_db(double mean_path_loss_db, double sigma_db, Rng& rng) {
  if (sigma_db == 0.0) return mean_path_loss_db;
  return mean_path_loss_db + rng.normal(0.0, sigma_db);
}

PathLossProfile atg_path_loss_profile(double tx_height_m, double rx_height_m,
                                      const AtgParams& p) {
  return [=](double d2d_m) {
    const LinkGeometry g = link_geometry(Point3{0.0, 0.0, tx_height_m},
                                         Point2{d2d_m, 0.0}, rx_height_m);
    return atg_mean_path_loss_db(g, p);
  };
}

PathLossProfile umi_path_loss_profile(const UmiParams& p) {
  return [=](double d2d_m) {
    const LinkGeometry g = link_geometry(Point3{0.0, 0.0, p.bs_height_m},
                                         Point2{d2d_m, 0.0}, p.ut_height_m);
    return umi_mean_path_loss_db(g, p);
  };
}

CoverageRadius coverage_radius(const PathLossProfile& model, const CoverageRule& rule) {
  constexpr double kMinDistance = 1e-3;   // models are undefined at exactly 0
  constexpr double kMaxDistance = 1e8;
  constexpr double kTolerance = 0.1;
  constexpr int kMaxIterations = 200;

  if (model(kMinDistance) > rule.threshold_db) {
    return CoverageRadius{0.0, true};
  }

  // Bracket the crossing, then bisect. lo always satisfies the threshold.
  double lo = kMinDistance;
  double hi = 1.0;
  while (hi < kMaxDistance && model(hi) <= rule.threshold_db) {
    lo = hi;
    hi *= 2.0;
  }
  if (hi >= kMaxDistance) {
    return CoverageRadius{kMaxDistance, false};
  }
  for (int i = 0; i < kMaxIterations && hi - lo > kTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (model(mid) <= rule.threshold_db) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return CoverageRadius{lo, false};
}

}  // namespace rabs
