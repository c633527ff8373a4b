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

#ifndef FDCERT_CERTIFY_HPP_
#define FDCERT_CERTIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fdcert/linalg.hpp"
#include "fdcert/moments.hpp"

namespace fdcert {

/// Warning bits attached to certificates and emitted in CSV `flags` columns.
enum CertificateFlag : std::uint32_t {
  kFlagNone = 0,
  /// P^2 or Q^2 recovered from (F, D) fell outside its feasible range.
  kFlagSpectralClamp = 1u << 0,
  /// The square-root argument of the certified overlap was negative.
  kFlagRadicandClamp = 1u << 1,
  /// The estimated D^2 was negative and D was truncated to zero.
  kFlagDeviationTruncated = 1u << 2,
  /// The fidelity-only or (r, u) expression exceeded 1 and was clamped.
  kFlagVacuousBound = 1u << 3,
  /// b_fd exceeded b_fidelity_only (unusual for coherent errors; not an error).
  kFlagFdLooserThanFidelity = 1u << 4,
};

enum class BoundSource { FD, RU };

std::string_view bound_source_name(BoundSource source);

struct CertificateBundle {
  std::size_t dim = 0;
  std::optional<double> d_exact;  ///< only when the error matrix is known
  double b_fidelity_only = 1.0;
  double b_fidelity_only_raw = 0.0;
  std::optional<double> b_ru;  ///< only when a unitarity was supplied
  std::optional<double> b_ru_raw;
  double b_fd = 1.0;
  double b_hybrid = 1.0;
  BoundSource hybrid_source = BoundSource::FD;
  double c_value = 0.0;
  std::uint32_t flags = kFlagNone;
};

/// m(X) = min over pure states of |<psi|X|psi>|, the distance from the origin
/// to the convex hull of the spectrum.
double min_overlap_exact(const UnitaryOperator& x);

/// Diamond distance between X . X^dag and the identity channel: sqrt(1 - m^2).
/// Evaluated as sin(w/2), with w the width of the smallest arc holding the
/// eigenphases, which keeps relative accuracy as X approaches a phase times 1.
double diamond_exact(const UnitaryOperator& x);

/// min(1, sqrt(d (d+1) r)). Throws unless r is in [0, 1].
double bound_fidelity_only(double r, std::size_t d);

/// min(1, d^2 c_d sqrt(u + 2 d r / (d-1) - 1)), c_d = sqrt(1 - 1/d^2) / 2.
/// Radicands down to -1e-12 are treated as zero; anything lower is an
/// inconsistent (r, u) pair and throws std::invalid_argument.
double bound_ru(double r, double u, std::size_t d);

/// Unclamped value of the (r, u) expression (same validation as bound_ru).
double bound_ru_raw(double r, double u, std::size_t d);

/// Certified overlap with diagnostics.
struct OverlapCertificate {
  double c = 0.0;
  double one_minus_c = 1.0;  ///< 1 - c without cancellation
  double bound = 1.0;        ///< sqrt(1 - c^2)
  double radicand = 0.0;     ///< (d - 2)(d Q + d^2 - (d + 2) P^2) before clamping
  SpectralInvariants invariants;
  std::uint32_t flags = kFlagNone;
};

/// Full evaluation of the (F, D) certificate for d >= 4:
///   c(F, D) = [P/d - sqrt((d-2)(d Q + d^2 - (d+2) P^2)) / (2d)]_+ .
/// Throws std::invalid_argument for d < 4 (use d2_deviation for qubits).
OverlapCertificate overlap_certificate(double F, double D, std::size_t d);

double certified_overlap(double F, double D, std::size_t d);

/// sqrt(1 - c(F, D)^2).
double bound_fd(double F, double D, std::size_t d);

struct HybridBound {
  double value = 1.0;
  BoundSource source = BoundSource::FD;
};

/// Minimum of the supplied upper bounds; throws if neither is supplied. Ties
/// go to the (F, D) bound.
HybridBound bound_hybrid(std::optional<double> b_ru, std::optional<double> b_fd);

/// Diagonal two-angle unitary attaining c(F, D):
///   diag(e^{i a}, e^{-i a}, ..., e^{i a}, e^{-i a}, e^{i b}, e^{-i b})
/// with cos b = c(F, D) and cos a = (P - 2 cos b) / (d - 2).
/// Requires even d >= 4 and both cosines in [-1, 1].
UnitaryOperator tightness_witness(double F, double D, std::size_t d);

/// Every bound computable from moment data alone. `u` enables the (r, u) bound.
CertificateBundle certify_moments(double F, double D, std::size_t d,
                                  std::optional<double> u = std::nullopt);

/// certify_moments on the closed-form moments of X, plus the exact distance.
CertificateBundle certify_unitary(const UnitaryOperator& x,
                                  std::optional<double> u = std::nullopt);

}  // namespace fdcert

#endif  // FDCERT_CERTIFY_HPP_
