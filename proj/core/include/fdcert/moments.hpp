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

#ifndef FDCERT_MOMENTS_HPP_
#define FDCERT_MOMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

#include "fdcert/linalg.hpp"

namespace fdcert {

/// Haar moments of the single-state fidelity f(psi) = |<psi|X|psi>|^2 of a
/// unitary error, with the trace invariants they are built from.
///
///   P^2 = |tr X|^2,  Q^2 = |tr X^2 + (tr X)^2|^2
///   F   = (d + P^2) / (d (d+1))
///   E2  = (2d(d+3) + 4(d+2) P^2 + Q^2) / (d (d+1) (d+2) (d+3)) = D^2 + F^2
struct MomentSummary {
  std::size_t dim = 0;
  double F = 1.0;
  double D = 0.0;
  double r = 0.0;  ///< 1 - F, computed without cancellation
  double E2 = 1.0;
  double P2 = 0.0;
  double Q2 = 0.0;
};

/// Closed-form F, D and E2 of a unitary error.
///
/// Works with the deficits d^2 - P^2 and (d(d+1))^2 - Q^2, accumulated from
/// tr(X) - d and tr(X^2) - d, so that r and D keep full relative precision as
/// X approaches the identity.
MomentSummary fd_from_unitary(const UnitaryOperator& x);

/// P^2 and Q^2 recovered from (F, D). The clamped values lie in [0, d^2] and
/// [0, (d + d^2)^2]; the raw values are kept so callers can detect data that
/// no unitary error could have produced.
struct SpectralInvariants {
  double P2 = 0.0;
  double Q2 = 0.0;
  double P2_raw = 0.0;
  double Q2_raw = 0.0;
  bool clamped = false;
  /// d < 4: (F, D) do not determine an independent Q (the d = 2 relation ties D to F).
  bool low_dimension = false;
};

SpectralInvariants pq_from_fd(double F, double D, std::size_t d);

/// |<psi|X|psi>|^2. Throws std::invalid_argument unless |psi| = 1 within 1e-10
/// and psi has dimension dim(X).
double single_fidelity(const UnitaryOperator& x, std::span<const Complex> psi);

/// Single-qubit unitary errors obey D = (1 - F) / sqrt(5).
double d2_deviation(double F);

/// tr of the projector onto the symmetric subspace of (C^d)^{(x)k}, i.e.
/// binomial(d + k - 1, k). Only k = 2 and k = 4 are supported.
double symmetric_projector_trace(std::size_t d, int k);

struct HaarMonteCarlo {
  double F_mc = 0.0;
  double E2_mc = 0.0;
  double stderr_F = 0.0;
  double stderr_E2 = 0.0;
  std::size_t samples = 0;
};

/// Sample means of f and f^2 over Haar-random pure states. Deterministic in
/// (x, samples, seed). Requires samples >= 100.
HaarMonteCarlo haar_mc_moments(const UnitaryOperator& x, std::size_t samples,
                               std::uint64_t seed);

}  // namespace fdcert

#endif  // FDCERT_MOMENTS_HPP_
