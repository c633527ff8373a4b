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

#include "fdcert/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fdcert/moments.hpp"
#include "fdcert/sampling.hpp"

namespace fdcert {

std::vector<ShotRecord> simulate_protocol(const UnitaryOperator& x, std::size_t M, int N,
                                          std::uint64_t seed) {
  if (M < 2) throw std::invalid_argument("simulate_protocol: need at least 2 input states");
  if (N < 2) throw std::invalid_argument("simulate_protocol: need at least 2 shots per state");
  std::vector<ShotRecord> records;
  records.reserve(M);
  for (std::size_t i = 0; i < M; ++i) {
    Rng rng = make_substream(seed, StreamTag::kProtocolState, i);
    const auto psi = sample_haar_state(x.dim(), rng);
    const double f = std::clamp(single_fidelity(x, psi), 0.0, 1.0);
    std::binomial_distribution<int> shots(N, f);
    records.push_back({shots(rng), N, f});
  }
  return records;
}

EstimationResult estimate_moments(std::span<const ShotRecord> records, std::uint64_t seed) {
  if (records.size() < 2) throw std::invalid_argument("estimate_moments: need M >= 2");
  const int N = records.front().shots;
  if (N < 2) throw std::invalid_argument("estimate_moments: need N >= 2");
  const double n = static_cast<double>(N);
  double sum_f = 0.0;
  double sum_f_sq = 0.0;
  double sum_factorial = 0.0;
  for (const auto& rec : records) {
    if (rec.shots != N) throw std::invalid_argument("estimate_moments: mixed shot counts");
    if (rec.pass_count < 0 || rec.pass_count > N) {
      throw std::invalid_argument("estimate_moments: pass count outside [0, N]");
    }
    const double k = static_cast<double>(rec.pass_count);
    const double f = k / n;
    sum_f += f;
    sum_f_sq += f * f;
    sum_factorial += k * (k - 1.0) / (n * (n - 1.0));
  }
  const double m = static_cast<double>(records.size());
  EstimationResult out;
  out.M = records.size();
  out.N = N;
  out.seed = seed;
  out.F_hat = sum_f / m;
  out.E2_hat = sum_factorial / m;
  out.F2_hat = (sum_f * sum_f - sum_f_sq) / (m * (m - 1.0));
  out.D2_hat = out.E2_hat - out.F2_hat;
  out.truncated = out.D2_hat < 0.0;
  out.D_hat = std::sqrt(std::max(out.D2_hat, 0.0));
  return out;
}

CertificateBundle certify_from_estimates(const EstimationResult& result, std::size_t d,
                                         std::optional<double> u) {
  auto bundle = certify_moments(result.F_hat, result.D_hat, d, u);
  if (result.truncated) bundle.flags |= kFlagDeviationTruncated;
  return bundle;
}

}  // namespace fdcert
