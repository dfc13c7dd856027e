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

#include "rabs/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rabs/errors.hpp"

namespace rabs {

namespace {

void validate_area(const AreaSpec& area) {
  if (!(area.width_m > 0.0) || !(area.height_m > 0.0)) {
    throw ConfigError("area dimensions must be positive");
  }
}

}  // namespace

UserSet generate_users(const AreaSpec& area, std::size_t n, const SeedSpec& seed,
                       double user_height_m) {
  validate_area(area);
  Rng rng(seed);
  UserSet users;
  users.user_height_m = user_height_m;
  users.positions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, area.width_m);
    const double y = rng.uniform(0.0, area.height_m);
    users.positions.push_back(Point2{x, y});
  }
  return users;
}

SiteGrid generate_site_grid(const AreaSpec& area, double spacing_m, double site_height_m) {
  validate_area(area);
  if (!(spacing_m > 0.0) || spacing_m > std::min(area.width_m, area.height_m)) {
    throw ConfigError("site grid spacing must be positive and no larger than the area");
  }
  // Count lines inclusive of both edges; the 1e-9 slack absorbs cases like
  // width/spacing that are integers up to rounding.
  const auto lines = [](double extent, double spacing) {
    return static_cast<int>(std::floor(extent / spacing + 1e-9)) + 1;
  };
  const int nx = lines(area.width_m, spacing_m);
  const int ny = lines(area.height_m, spacing_m);

  SiteGrid grid;
  grid.spacing_m = spacing_m;
  grid.site_height_m = site_height_m;
  grid.sites.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      grid.sites.push_back(Point3{i * spacing_m, j * spacing_m, site_height_m});
    }
  }
  return grid;
}

LinkGeometry link_geometry(const Point3& tx, const Point2& rx, double rx_height_m) {
  if (!(rx_height_m >= 0.0) || !(tx.z > rx_height_m)) {
    throw std::invalid_argument("link geometry requires tx height > rx height >= 0");
  }
  const double dh = tx.z - rx_height_m;
  const double d2d = horizontal_distance(horizontal(tx), rx);
  LinkGeometry g;
  g.d2d_m = d2d;
  g.d3d_m = std::hypot(d2d, dh);
  // atan2(dh, 0) is exactly pi/2, so the overhead case lands on 90 degrees.
  g.elevation_deg = std::atan2(dh, d2d) * 180.0 / 3.14159265358979323846;
  return g;
}

}  // namespace rabs
