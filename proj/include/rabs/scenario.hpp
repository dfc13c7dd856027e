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
// Simulation world: service area, random user drops, the lamppost candidate
// grid, and link geometry. Everything here is a pure function of its inputs;
// all randomness flows through SeedSpec substreams.

#ifndef RABS_SCENARIO_HPP_
#define RABS_SCENARIO_HPP_

#include <cstddef>
#include <vector>

#include "rabs/geometry.hpp"
#include "rabs/rng.hpp"

namespace rabs {

// Rectangular service area with the lower-left corner at the origin.
struct AreaSpec {
  double width_m{2000.0};
  double height_m{2000.0};
};

struct UserSet {
  std::vector<Point2> positions;
  double user_height_m{1.5};
};

// Regular candidate grid (lampposts / micro BS sites), inclusive of both
// boundary lines: 2 km at 100 m spacing gives 21 x 21 = 441 sites.
struct SiteGrid {
  double spacing_m{100.0};
  double site_height_m{7.0};
  std::vector<Point3> sites;
};

// n users dropped uniformly over the area. Identical (area, n, seed) inputs
// reproduce bit-identical positions.
UserSet generate_users(const AreaSpec& area, std::size_t n, const SeedSpec& seed,
                       double user_height_m = 1.5);

// Grid points at (i*spacing, j*spacing, site_height) for every i, j whose
// coordinates stay within the area. Throws ConfigError on invalid spacing.
SiteGrid generate_site_grid(const AreaSpec& area, double spacing_m, double site_height_m);

// d2d, d3d and elevation angle between an elevated transmitter and a ground
// receiver at rx_height. Requires tx.z > rx_height >= 0.
LinkGeometry link_geometry(const Point3& tx, const Point2& rx, double rx_height_m);

}  // namespace rabs

#endif  // RABS_SCENARIO_HPP_
