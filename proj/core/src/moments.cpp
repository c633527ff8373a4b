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

#include "fdcert/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fdcert/sampling.hpp"

namespace fdcert {

namespace {

constexpr double kStateNormTolerance = 1e-10;

double quadratic_form_fidelity(const ComplexSquareMatrix& x, std::span<const Complex> psi) {
  const std::size_t d = x.dim();
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += x(i, j) * psi[j];
    overlap += std::conj(psi[i]) * row;
  }
  return std::norm(overlap);
}

}  // namespace

MomentSummary fd_from_unitary(const UnitaryOperator& x) {
  const auto& m = x.matrix();
  const std::size_t dim = m.dim();
  const double d = static_cast<double>(dim);

  // E = X - 1. The real part of each diagonal entry is O(|E|^2) and is lost
  // to rounding when taken as Re(X_ii) - 1; unitarity of the column recovers it.
  Complex shift = 0.0;  // tr(E)
  Complex e_sq = 0.0;   // tr(E^2)
  std::vector<Complex> diag(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Complex xii = m(i, i);
    double off = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != i) off += std::norm(m(j, i));
    }
    const double re = xii.real() > 0.0
                          ? -(off + xii.imag() * xii.imag()) / (1.0 + xii.real())
                          : xii.real() - 1.0;
    diag[i] = Complex(re, xii.imag());
    shift += diag[i];
  }
  for (std::size_t i = 0; i < dim; ++i) {
    e_sq += diag[i] * diag[i];
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != i) e_sq += m(i, j) * m(j, i);
    }
  }
  const double dd1 = d * (d + 1.0);
  // tr(X^2) + tr(X)^2 - d(d+1)
  const Complex w = 2.0 * (d + 1.0) * shift + e_sq + shift * shift;

  const double p_deficit =
      std::clamp(-(2.0 * d * shift.real() + std::norm(shift)), 0.0, d * d);
  const double q_deficit =
      std::clamp(-(2.0 * dd1 * w.real() + std::norm(w)), 0.0, dd1 * dd1);

  const double k4 = dd1 * (d + 2.0) * (d + 3.0);
  MomentSummary out;
  out.dim = dim;
  out.r = p_deficit / dd1;
  out.F = 1.0 - out.r;
  const double d2 =
      std::max((2.0 * (d + 1.0) * (d + 2.0) * p_deficit - q_deficit) / k4 - out.r * out.r, 0.0);
  out.D = std::sqrt(d2);
  out.E2 = d2 + out.F * out.F;
  out.P2 = d * d - p_deficit;
  out.Q2 = dd1 * dd1 - q_deficit;
  return out;
}

SpectralInvariants pq_from_fd(double F, double D, std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("pq_from_fd: dimension must be at least 2");
  if (!std::isfinite(F) || !std::isfinite(D)) {
    throw std::invalid_argument("pq_from_fd: non-finite moments");
  }
  const double d = static_cast<double>(dim);
  const double k4 = d * (d + 1.0) * (d + 2.0) * (d + 3.0);
  SpectralInvariants out;
  out.low_dimension = dim < 4;
  out.P2_raw = d * (d + 1.0) * F - d;
  out.Q2_raw = k4 * (D * D + F * F) - 2.0 * d * (d + 3.0) - 4.0 * (d + 2.0) * out.P2_raw;
  const double q_cap = (d + d * d) * (d + d * d);
  out.P2 = std::clamp(out.P2_raw, 0.0, d * d);
  out.Q2 = std::clamp(out.Q2_raw, 0.0, q_cap);
  out.clamped = out.P2 != out.P2_raw || out.Q2 != out.Q2_raw;
  return out;
}

double single_fidelity(const UnitaryOperator& x, std::span<const Complex> psi) {
  if (psi.size() != x.dim()) throw std::invalid_argument("single_fidelity: dimension mismatch");
  double norm2 = 0.0;
  for (const auto& a : psi) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > kStateNormTolerance) {
    throw std::invalid_argument("single_fidelity: state is not normalized");
  }
  return std::min(quadratic_form_fidelity(x.matrix(), psi), 1.0);
}

double d2_deviation(double F) { return (1.0 - F) / std::sqrt(5.0); }

double symmetric_projector_trace(std::size_t dim, int k) {
  const double d = static_cast<double>(dim);
  switch (k) {
    case 2: return d * (d + 1.0) / 2.0;
    case 4: return d * (d + 1.0) * (d + 2.0) * (d + 3.0) / 24.0;
    default: throw std::invalid_argument("symmetric_projector_trace: only k = 2 and k = 4");
  }
}

HaarMonteCarlo haar_mc_moments(const UnitaryOperator& x, std::size_t samples,
                               std::uint64_t seed) {
  if (samples < 100) throw std::invalid_argument("haar_mc_moments: need at least 100 samples");
  Rng rng = make_substream(seed, StreamTag::kHaarMonteCarlo, 0);
  // Welford accumulation for f and f^2.
  double mean_f = 0.0, m2_f = 0.0, mean_f2 = 0.0, m2_f2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto psi = sample_haar_state(x.dim(), rng);
    const double f = std::min(quadratic_form_fidelity(x.matrix(), psi), 1.0);
    const double f2 = f * f;
    const double n = static_cast<double>(s + 1);
    const double df = f - mean_f;
    mean_f += df / n;
    m2_f += df * (f - mean_f);
    const double df2 = f2 - mean_f2;
    mean_f2 += df2 / n;
    m2_f2 += df2 * (f2 - mean_f2);
  }
  const double n = static_cast<double>(samples);
  HaarMonteCarlo out;
  out.samples = samples;
  out.F_mc = mean_f;
  out.E2_mc = mean_f2;
  out.stderr_F = std::sqrt(m2_f / (n - 1.0) / n);
  out.stderr_E2 = std::sqrt(m2_f2 / (n - 1.0) / n);
  return out;
}

}  // namespace fdcert
