// Copyright 2026 The fdcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdcert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdcert {

namespace {

double cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double norm(const PlanarPoint& p) { return std::hypot(p.x, p.y); }

double distance_origin_to_segment(const PlanarPoint& a, const PlanarPoint& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return norm(a);
  const double t = std::clamp(-(a.x * dx + a.y * dy) / len2, 0.0, 1.0);
  return std::hypot(a.x + t * dx, a.y + t * dy);
}

std::vector<PlanarPoint> deduplicate(std::vector<PlanarPoint> sorted) {
  std::vector<PlanarPoint> kept;
  kept.reserve(sorted.size());
  for (const auto& p : sorted) {
    bool duplicate = false;
    // Sorted by x, so only kept points with x within tolerance can match.
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      if (p.x - it->x > kHullDuplicateTolerance) break;
      if (std::hypot(p.x - it->x, p.y - it->y) <= kHullDuplicateTolerance) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(p);
  }
  return kept;
}

}  // namespace

std::vector<PlanarPoint> convex_hull(std::span<const PlanarPoint> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("convex_hull: non-finite point");
    }
  }
  std::vector<PlanarPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const PlanarPoint& a, const PlanarPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts = deduplicate(std::move(pts));
  if (pts.size() <= 2) return pts;

  std::vector<PlanarPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= kHullCollinearTolerance) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= kHullCollinearTolerance) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double distance_origin_to_hull(std::span<const PlanarPoint> hull) {
  if (hull.empty()) throw std::invalid_argument("distance_origin_to_hull: empty hull");
  if (hull.size() == 1) return norm(hull[0]);
  if (hull.size() == 2) return distance_origin_to_segment(hull[0], hull[1]);

  const PlanarPoint origin{};
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, origin) < -kHullBoundaryTolerance) inside = false;
    best = std::min(best, distance_origin_to_segment(a, b));
  }
  return inside ? 0.0 : best;
}

}  // namespace fdcert
