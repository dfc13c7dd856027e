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
// Coverage-maximizing placement. A user is covered when its horizontal
// distance to some deployed node is at most the coverage radius (boundary
// inclusive); the radius comes from the channel module once per platform.

#ifndef RABS_PLACEMENT_HPP_
#define RABS_PLACEMENT_HPP_

#include <vector>

#include "rabs/geometry.hpp"
#include "rabs/scenario.hpp"

namespace rabs {

struct Placement {
  std::vector<Point2> positions;
  std::vector<int> site_indices;  // parallel to positions for site-based placements
  std::vector<int> covered;       // sorted user indices
  double coverage_fraction{0.0};
};

// Indices of users within radius of position, ascending.
std::vector<int> covered_users(const Point2& position, double radius_m, const UserSet& users);

// Exact single-disk maximum coverage. Candidate centers are every user plus
// both intersection points of each pair of user-centered radius-r circles
// (O(n^2) candidates, O(n^3) total); some optimal center always lies in that
// set. Ties resolved by the first candidate in enumeration order.
Placement best_free_disk(const UserSet& users, double radius_m);

// Same candidate enumeration with every candidate projected onto the
// feasible disk (plus the disk center). A projection heuristic, not exact:
// the result is guaranteed >= the best candidate already inside the region
// and >= the region-center placement.
Placement best_constrained_disk(const UserSet& users, double radius_m, const Disk& feasible);

// Greedy maximum coverage over the site grid as an ordered sequence:
// site_order[i] is the i-th site chosen, cumulative_covered[i] the users
// covered by the first i+1 sites. Stops early when coverage is complete or
// no site adds coverage.
struct GreedySiteSequence {
  std::vector<int> site_order;
  std::vector<int> cumulative_covered;
};
GreedySiteSequence greedy_site_sequence(const UserSet& users, double radius_m,
                                        const SiteGrid& grid, int k_max);

// Standard greedy maximum coverage: iteratively add the site covering the
// most not-yet-covered users, ties to the lowest site index. k larger than
// the grid is clamped with a warning.
Placement select_sites_greedy(const UserSet& users, double radius_m, const SiteGrid& grid,
                              int k);

// True optimum by exhaustive subset enumeration. Refuses instances with
// C(|sites|, k) > 10^6.
Placement select_sites_exact(const UserSet& users, double radius_m, const SiteGrid& grid,
                             int k);

}  // namespace rabs

#endif  // RABS_PLACEMENT_HPP_
