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
// Mean path-loss models and the coverage-radius solver.
//
// High-altitude platforms use the probabilistic-LoS air-to-ground model
// (sigmoid LoS probability in the elevation angle, FSPL plus LoS/NLoS excess
// losses). Low-altitude nodes on lampposts use the 3GPP TR 38.901 UMi street
// canyon model (LoS/NLoS pair weighted by the UMi LoS probability). Both are
// mean models: coverage is a deterministic threshold test on path loss, so no
// shadowing is drawn on the coverage path. A shadowing helper is provided as
// an off-by-default hook.

#ifndef RABS_CHANNEL_HPP_
#define RABS_CHANNEL_HPP_

#include <functional>

#include "rabs/geometry.hpp"
#include "rabs/rng.hpp"

namespace rabs {

// Air-to-ground model parameters. Defaults are the urban environment set.
struct AtgParams {
  double a{9.61};             // sigmoid shape
  double b{0.16};             // sigmoid slope (1/deg)
  double eta_los_db{1.0};     // LoS excess loss
  double eta_nlos_db{20.0};   // NLoS excess loss
  double carrier_hz{2.0e9};
};

struct UmiParams {
  double carrier_hz{2.0e9};
  double bs_height_m{7.0};
  double ut_height_m{1.5};
};

struct CoverageRule {
  double threshold_db{118.0};
};

// P(LoS) = 1 / (1 + a*exp(-b*(theta - a))). Strictly increasing in theta,
// valued in (0, 1).
double atg_los_probability(double elevation_deg, const AtgParams& p);

double free_space_path_loss_db(double d3d_m, double carrier_hz);

// FSPL(d3d) + P_LoS*eta_LoS + (1 - P_LoS)*eta_NLoS. Throws std::domain_error
// when d3d == 0.
double atg_mean_path_loss_db(const LinkGeometry& g, const AtgParams& p);

// UMi street canyon LoS probability: 1 for d2d <= 18 m, else
// 18/d2d + exp(-d2d/36)*(1 - 18/d2d).
double umi_los_probability(double d2d_m);

// Breakpoint distance 4*(h_BS - 1)*(h_UT - 1)*f/c.
double umi_breakpoint_distance_m(const UmiParams& p);

// P_LoS-weighted combination of the TR 38.901 UMi street canyon LoS and
// NLoS = max(LoS, NLoS') losses. Throws std::domain_error when d2d == 0.
double umi_mean_path_loss_db(const LinkGeometry& g, const UmiParams& p);

// Shadow-fading hook: mean path loss plus a zero-mean lognormal draw.
// Not used by the coverage pipeline (sigma defaults to 0 in the config).
double shadowed_path_loss_db(double mean_path_loss_db, double sigma_db, Rng& rng);

// Path loss as a function of horizontal distance with all heights and
// parameters bound in. This is the form the radius solver consumes; both
// models are monotone non-decreasing in d2d at fixed heights.
using PathLossProfile = std::function<double(double d2d_m)>;

PathLossProfile atg_path_loss_profile(double tx_height_m, double rx_height_m,
                                      const AtgParams& p);
PathLossProfile umi_path_loss_profile(const UmiParams& p);

struct CoverageRadius {
  double radius_m{0.0};
  bool degenerate{false};  // threshold below the loss at minimum distance
};

// Largest horizontal distance r with PL(r) <= threshold, by bisection to
// 0.1 m on a monotone profile. The result satisfies PL(r) <= threshold and
// PL(r + 1 m) > threshold.
CoverageRadius coverage_radius(const PathLossProfile& model, const CoverageRule& rule);

}  // namespace rabs

#endif  // RABS_CHANNEL_HPP_
