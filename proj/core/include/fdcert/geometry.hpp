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

#ifndef FDCERT_GEOMETRY_HPP_
#define FDCERT_GEOMETRY_HPP_

#include <complex>
#include <span>
#include <vector>

namespace fdcert {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  static PlanarPoint from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }
  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

inline constexpr double kHullCollinearTolerance = 1e-12;
inline constexpr double kHullDuplicateTolerance = 1e-9;
inline constexpr double kHullBoundaryTolerance = 1e-12;

/// Counter-clockwise hull vertices (monotone chain). Points within 1e-9 of an
/// earlier point are merged and collinear boundary points are dropped, so the
/// result may have one vertex (all points coincide) or two (a segment).
/// Throws std::invalid_argument on empty or non-finite input.
std::vector<PlanarPoint> convex_hull(std::span<const PlanarPoint> points);

/// Euclidean distance from the origin to the filled polygon, segment or point
/// described by `hull`. Zero when the origin lies inside or on the boundary.
double distance_origin_to_hull(std::span<const PlanarPoint> hull);

}  // namespace fdcert

#endif  // FDCERT_GEOMETRY_HPP_
