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

#ifndef FDCERT_ESTIMATE_HPP_
#define FDCERT_ESTIMATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdcert/certify.hpp"
#include "fdcert/linalg.hpp"

namespace fdcert {

/// Outcome of N projective survival tests on one random input state.
struct ShotRecord {
  int pass_count = 0;
  int shots = 0;
  /// Survival probability the counts were drawn from. Test-oracle data only;
  /// never serialized.
  double true_f = 0.0;
};

struct EstimationResult {
  std::size_t M = 0;
  int N = 0;
  std::uint64_t seed = 0;
  double F_hat = 0.0;
  double E2_hat = 0.0;
  double F2_hat = 0.0;  ///< cross-average estimate of F^2
  double D2_hat = 0.0;
  double D_hat = 0.0;
  bool truncated = false;  ///< D2_hat < 0, so D_hat was set to 0
};

/// Randomized survival-probability sampling: for each of M Haar-random inputs
/// psi_i draw K_i ~ Binomial(N, |<psi_i|X|psi_i>|^2). State i uses substream
/// (seed, i), so records are reproducible and prefix-stable in M.
/// Requires M >= 2 and N >= 2.
std::vector<ShotRecord> simulate_protocol(const UnitaryOperator& x, std::size_t M, int N,
                                          std::uint64_t seed);

/// Unbiased moment estimators from shot counts:
///   F_hat  = mean K_i / N
///   E2_hat = mean K_i (K_i - 1) / (N (N - 1))
///   F2_hat = sum_{i != j} f_i f_j / (M (M - 1))
///   D2_hat = E2_hat - F2_hat,  D_hat = sqrt(max(D2_hat, 0))
/// Requires at least two records, all with the same N >= 2.
EstimationResult estimate_moments(std::span<const ShotRecord> records,
                                  std::uint64_t seed = 0);

/// Moment-data certificates evaluated at (F_hat, D_hat). Requires d >= 4.
CertificateBundle certify_from_estimates(const EstimationResult& result, std::size_t d,
                                         std::optional<double> u = std::nullopt);

}  // namespace fdcert

#endif  // FDCERT_ESTIMATE_HPP_
