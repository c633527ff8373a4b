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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

using namespace fdcert;

namespace {

PlanarPoint unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

double hull_distance(const std::vector<PlanarPoint>& points) {
  return distance_origin_to_hull(convex_hull(points));
}

// Brute-force minimum of |z| over every pairwise segment, sampled densely.
// Only meaningful when the origin lies outside the hull.
double sampled_pair_minimum(const std::vector<PlanarPoint>& points, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      for (int s = 0; s <= samples; ++s) {
        const double t = static_cast<double>(s) / samples;
        best = std::min(best, std::hypot((1 - t) * points[i].x + t * points[j].x,
                                         (1 - t) * points[i].y + t * points[j].y));
      }
    }
  }
  return best;
}

bool origin_enclosed_by_arcs(std::vector<double> angles) {
  std::sort(angles.begin(), angles.end());
  double gap = angles.front() + 2 * std::numbers::pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return gap < std::numbers::pi;
}

}  // namespace

TEST(geometry, hull_single_point) {
  const std::vector<PlanarPoint> pts = {{1, 0}};
  EXPECT_EQ(convex_hull(pts), pts);
}

TEST(geometry, hull_collapses_duplicates_to_segment) {
  const double phi = 0.9;
  const std::vector<PlanarPoint> pts = {{1, 0}, {1, 0}, {1, 0}, unit(phi)};
  const auto hull = convex_hull(pts);
  ASSERT_EQ(hull.size(), 2u);
  EXPECT_TRUE((hull[0] == pts[0] && hull[1] == pts[3]) || (hull[1] == pts[0] && hull[0] == pts[3]));
}

TEST(geometry, hull_square_is_ccw) {
  const std::vector<PlanarPoint> pts = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0, 0}, {0.5, 0.5}};
  const auto hull = convex_hull(pts);
  ASSERT_EQ(hull.size(), 4u);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % 4];
    const auto& c = hull[(i + 2) % 4];
    EXPECT_GT((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x), 0.0);
  }
}

TEST(geometry, hull_drops_collinear_points) {
  const std::vector<PlanarPoint> pts = {{0, 0}, {1, 0}, {2, 0}, {2, 2}, {1, 1}};
  EXPECT_EQ(convex_hull(pts).size(), 3u);
  const std::vector<PlanarPoint> line = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_EQ(convex_hull(line).size(), 2u);
}

TEST(geometry, hull_errors) {
  EXPECT_THROW(convex_hull(std::vector<PlanarPoint>{}), std::invalid_argument);
  EXPECT_THROW(convex_hull(std::vector<PlanarPoint>{{1, std::nan("")}}), std::invalid_argument);
}

TEST(geometry, distance_examples) {
  for (double phi : {0.1, 1.0, 2.5, 3.1}) {
    EXPECT_NEAR(hull_distance({{1, 0}, {1, 0}, unit(phi)}), std::cos(phi / 2), 1e-15);
  }
  EXPECT_EQ(hull_distance({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 0.0);
  EXPECT_NEAR(hull_distance({unit(0.4)}), 1.0, 1e-15);
  EXPECT_EQ(hull_distance({{1, 0}, {-1, 0}}), 0.0);
  // Segment whose nearest point is an endpoint.
  EXPECT_NEAR(hull_distance({{1, 0}, {2, 1}}), 1.0, 1e-15);
  // Triangle away from the origin: nearest edge is x = 1.
  EXPECT_NEAR(hull_distance({{1, -1}, {1, 1}, {3, 0}}), 1.0, 1e-15);
}

TEST(geometry, origin_on_boundary_counts_as_inside) {
  EXPECT_EQ(hull_distance({{-1, 0}, {1, 0}, {0, 1}}), 0.0);
}

TEST(geometry, distance_at_most_nearest_point) {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<PlanarPoint> pts(3 + rep % 6);
    double nearest = std::numeric_limits<double>::infinity();
    for (auto& p : pts) {
      p = {g(rng) + 1.5, g(rng)};
      nearest = std::min(nearest, std::hypot(p.x, p.y));
    }
    EXPECT_LE(hull_distance(pts), nearest + 1e-15);
  }
}

TEST(geometry, rotation_invariance) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> arc(-1.2, 1.2), turn(0, 2 * std::numbers::pi);
  std::vector<double> angles(7);
  for (auto& a : angles) a = arc(rng);
  std::vector<PlanarPoint> base;
  for (double a : angles) base.push_back(unit(a));
  const double reference = hull_distance(base);
  EXPECT_GT(reference, 0.1);
  for (int k = 0; k < 10; ++k) {
    const double rot = turn(rng);
    std::vector<PlanarPoint> rotated;
    for (double a : angles) rotated.push_back(unit(a + rot));
    EXPECT_NEAR(hull_distance(rotated), reference, 1e-12);
  }
}

TEST(geometry, monotone_under_insertion) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> arc(-1.5, 1.5);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<PlanarPoint> pts = {unit(arc(rng)), unit(arc(rng))};
    double previous = hull_distance(pts);
    for (int k = 0; k < 6; ++k) {
      pts.push_back(unit(arc(rng)));
      const double now = hull_distance(pts);
      EXPECT_LE(now, previous + 1e-15);
      previous = now;
    }
  }
}

TEST(geometry, brute_force_unit_circle_sets) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> half_width(0.1, 3.0);
  for (int rep = 0; rep < 1000; ++rep) {
    const double w = half_width(rng);
    std::uniform_real_distribution<double> arc(-w, w);
    std::vector<double> angles(2 + rep % 5);
    std::vector<PlanarPoint> pts;
    for (auto& a : angles) {
      a = arc(rng);
      pts.push_back(unit(a));
    }
    const double computed = hull_distance(pts);
    if (origin_enclosed_by_arcs(angles)) {
      EXPECT_EQ(computed, 0.0);
      continue;
    }
    const double sampled = sampled_pair_minimum(pts, 10000);
    EXPECT_GE(sampled, computed - 1e-6);
    EXPECT_LE(sampled, computed + 1e-6);
  }
}
