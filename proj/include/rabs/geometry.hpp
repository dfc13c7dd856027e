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

#ifndef RABS_GEOMETRY_HPP_
#define RABS_GEOMETRY_HPP_

#include <cmath>

namespace rabs {

struct Point2 {
  double x{0.0};
  double y{0.0};
};

struct Point3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};
};

// Closed disk in the horizontal plane. radius_m may be +inf (unbounded).
struct Disk {
  Point2 center;
  double radius_m{0.0};
};

inline double squared_distance(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double horizontal_distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline Point2 horizontal(const Point3& p) { return Point2{p.x, p.y}; }

inline bool disk_contains(const Disk& d, const Point2& p) {
  return squared_distance(d.center, p) <= d.radius_m * d.radius_m;
}

// Nearest point of the closed disk to p (p itself when inside).
inline Point2 project_to_disk(const Disk& d, const Point2& p) {
  const double dist = horizontal_distance(d.center, p);
  if (dist <= d.radius_m || dist == 0.0) return p;
  const double scale = d.radius_m / dist;
  return Point2{d.center.x + (p.x - d.center.x) * scale,
                d.center.y + (p.y - d.center.y) * scale};
}

// Transmitter-to-receiver link geometry used by all path-loss models.
struct LinkGeometry {
  double d2d_m{0.0};           // horizontal distance
  double d3d_m{0.0};           // slant distance
  double elevation_deg{0.0};   // angle above horizontal, 90 when overhead
};

}  // namespace rabs

#endif  // RABS_GEOMETRY_HPP_
