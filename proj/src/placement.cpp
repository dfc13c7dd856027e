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

#include "rabs/placement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <stdexcept>

namespace rabs {

namespace {

int count_covered(const Point2& position, double radius_m, const UserSet& users) {
  const double r2 = radius_m * radius_m;
  int count = 0;
  for (const auto& u : users.positions) {
    if (squared_distance(position, u) <= r2) ++count;
  }
  return count;
}

Placement placement_at(const Point2& position, double radius_m, const UserSet& users) {
  Placement p;
  p.positions = {position};
  p.covered = covered_users(position, radius_m, users);
  p.coverage_fraction =
      users.positions.empty()
          ? 0.0
          : static_cast<double>(p.covered.size()) / static_cast<double>(users.positions.size());
  return p;
}

// Candidate centers: every user, plus the two intersection points of each
// user-pair circle of radius r (pairs closer than 2r). Intersection points
// are nudged slightly toward the pair midpoint so that both generating users
// stay strictly inside under floating point.
std::vector<Point2> disk_candidates(const UserSet& users, double radius_m) {
  const auto& pts = users.positions;
  std::vector<Point2> candidates;
  candidates.reserve(pts.size() * pts.size());
  candidates.insert(candidates.end(), pts.begin(), pts.end());

  const double nudge = 1e-9 * radius_m;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = horizontal_distance(pts[i], pts[j]);
      if (d == 0.0 || d > 2.0 * radius_m) continue;
      const double half = 0.5 * d;
      const double h2 = radius_m * radius_m - half * half;
      const Point2 mid{0.5 * (pts[i].x + pts[j].x), 0.5 * (pts[i].y + pts[j].y)};
      if (h2 <= 0.0) {
        candidates.push_back(mid);
        continue;
      }
      const double h = std::sqrt(h2);
      const double ux = (pts[j].x - pts[i].x) / d;
      const double uy = (pts[j].y - pts[i].y) / d;
      const double offset = h - nudge;  // pulled toward mid along the normal
      candidates.push_back(Point2{mid.x - uy * offset, mid.y + ux * offset});
      candidates.push_back(Point2{mid.x + uy * offset, mid.y - ux * offset});
    }
  }
  return candidates;
}

Placement best_of_candidates(const std::vector<Point2>& candidates, double radius_m,
                             const UserSet& users) {
  int best_count = -1;
  Point2 best{};
  for (const auto& c : candidates) {
    const int count = count_covered(c, radius_m, users);
    if (count > best_count) {
      best_count = count;
      best = c;
    }
  }
  return placement_at(best, radius_m, users);
}

// Per-site covered-user index lists, shared by greedy and exact selection.
std::vector<std::vector<int>> site_cover_lists(const UserSet& users, double radius_m,
                                               const SiteGrid& grid) {
  std::vector<std::vector<int>> cover(grid.sites.size());
  for (std::size_t s = 0; s < grid.sites.size(); ++s) {
    cover[s] = covered_users(horizontal(grid.sites[s]), radius_m, users);
  }
  return cover;
}

Placement placement_from_sites(const std::vector<int>& site_indices,
                               const std::vector<std::vector<int>>& cover,
                               const SiteGrid& grid, std::size_t n_users) {
  Placement p;
  p.site_indices = site_indices;
  std::vector<char> covered(n_users, 0);
  for (int s : site_indices) {
    p.positions.push_back(horizontal(grid.sites[static_cast<std::size_t>(s)]));
    for (int u : cover[static_cast<std::size_t>(s)]) covered[static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t u = 0; u < n_users; ++u) {
    if (covered[u]) p.covered.push_back(static_cast<int>(u));
  }
  p.coverage_fraction =
      n_users == 0 ? 0.0 : static_cast<double>(p.covered.size()) / static_cast<double>(n_users);
  return p;
}

int clamp_k(int k, std::size_t n_sites, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  if (static_cast<std::size_t>(k) > n_sites) {
    std::cerr << "warning: " << who << ": k=" << k << " clamped to " << n_sites
              << " sites\n";
    return static_cast<int>(n_sites);
  }
  return k;
}

}  // namespace

std::vector<int> covered_users(const Point2& position, double radius_m, const UserSet& users) {
  const double r2 = radius_m * radius_m;
  std::vector<int> indices;
  for (std::size_t i = 0; i < users.positions.size(); ++i) {
    if (squared_distance(position, users.positions[i]) <= r2) {
      indices.push_back(static_cast<int>(i));
    }
  }
  return indices;
}

Placement best_free_disk(const UserSet& users, double radius_m) {
  if (users.positions.empty()) {
    throw std::invalid_argument("best_free_disk requires at least one user");
  }
  if (!(radius_m > 0.0)) throw std::invalid_argument("coverage radius must be positive");
  return best_of_candidates(disk_candidates(users, radius_m), radius_m, users);
}

Placement best_constrained_disk(const UserSet& users, double radius_m, const Disk& feasible) {
  if (users.positions.empty()) {
    throw std::invalid_argument("best_constrained_disk requires at least one user");
  }
  if (!(radius_m > 0.0)) throw std::invalid_argument("coverage radius must be positive");
  if (feasible.radius_m < 0.0) throw std::invalid_argument("feasible region radius < 0");

  std::vector<Point2> candidates = disk_candidates(users, radius_m);
  for (auto& c : candidates) c = project_to_disk(feasible, c);
  candidates.push_back(feasible.center);
  return best_of_candidates(candidates, radius_m, users);
}

GreedySiteSequence greedy_site_sequence(const UserSet& users, double radius_m,
                                        const SiteGrid& grid, int k_max) {
  k_max = clamp_k(k_max, grid.sites.size(), "greedy_site_sequence");
  const auto cover = site_cover_lists(users, radius_m, grid);
  const std::size_t n_users = users.positions.size();

  GreedySiteSequence seq;
  std::vector<char> covered(n_users, 0);
  std::vector<char> selected(grid.sites.size(), 0);
  int covered_count = 0;

  for (int round = 0; round < k_max; ++round) {
    int best_site = -1;
    int best_gain = 0;
    for (std::size_t s = 0; s < grid.sites.size(); ++s) {
      if (selected[s]) continue;
      int gain = 0;
      for (int u : cover[s]) {
        if (!covered[static_cast<std::size_t>(u)]) ++gain;
      }
      if (gain > best_gain) {  // strict: ties keep the lowest site index
        best_gain = gain;
        best_site = static_cast<int>(s);
      }
    }
    if (best_site < 0) break;  // no site adds coverage
    selected[static_cast<std::size_t>(best_site)] = 1;
    for (int u : cover[static_cast<std::size_t>(best_site)]) {
      if (!covered[static_cast<std::size_t>(u)]) {
        covered[static_cast<std::size_t>(u)] = 1;
        ++covered_count;
      }
    }
    seq.site_order.push_back(best_site);
    seq.cumulative_covered.push_back(covered_count);
    if (static_cast<std::size_t>(covered_count) == n_users) break;
  }
  return seq;
}

Placement select_sites_greedy(const UserSet& users, double radius_m, const SiteGrid& grid,
                              int k) {
  const GreedySiteSequence seq = greedy_site_sequence(users, radius_m, grid, k);
  const auto cover = site_cover_lists(users, radius_m, grid);
  return placement_from_sites(seq.site_order, cover, grid, users.positions.size());
}

Placement select_sites_exact(const UserSet& users, double radius_m, const SiteGrid& grid,
                             int k) {
  k = clamp_k(k, grid.sites.size(), "select_sites_exact");
  const std::size_t n_sites = grid.sites.size();

  // Combinatorial guard: C(n_sites, k) <= 10^6.
  double combinations = 1.0;
  for (int i = 0; i < k; ++i) {
    combinations *= static_cast<double>(n_sites - static_cast<std::size_t>(i)) /
                    static_cast<double>(i + 1);
    if (combinations > 1e6) {
      throw std::invalid_argument("select_sites_exact: instance exceeds 10^6 subsets");
    }
  }

  const auto cover = site_cover_lists(users, radius_m, grid);
  const std::size_t n_users = users.positions.size();
  const std::size_t words = (n_users + 63) / 64;

  std::vector<std::uint64_t> masks(n_sites * words, 0);
  for (std::size_t s = 0; s < n_sites; ++s) {
    for (int u : cover[s]) {
      masks[s * words + static_cast<std::size_t>(u) / 64] |=
          std::uint64_t{1} << (static_cast<std::size_t>(u) % 64);
    }
  }

  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;

  std::vector<int> best_subset;
  int best_count = -1;
  std::vector<std::uint64_t> acc(words);
  while (true) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int s : subset) {
      for (std::size_t w = 0; w < words; ++w) {
        acc[w] |= masks[static_cast<std::size_t>(s) * words + w];
      }
    }
    int count = 0;
    for (std::uint64_t wrd : acc) count += std::popcount(wrd);
    if (count > best_count) {  // first-best keeps lexicographically smallest subset
      best_count = count;
      best_subset = subset;
    }

    // next k-combination in lexicographic order
    int i = k - 1;
    while (i >= 0 &&
           subset[static_cast<std::size_t>(i)] == static_cast<int>(n_sites) - k + i) {
      --i;
    }
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return placement_from_sites(best_subset, cover, grid, n_users);
}

}  // namespace rabs
