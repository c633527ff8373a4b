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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fdcert/gates.hpp"
#include "fdcert/sampling.hpp"
#include "test_support.hpp"

using namespace fdcert;

namespace {

double cz_F(double phi) { return 1.0 - 0.6 * std::pow(std::sin(phi / 2), 2); }
double cz_D(double phi) { return 0.2 * std::sqrt(17.0 / 7.0) * std::pow(std::sin(phi / 2), 2); }

UnitaryOperator z_rotation(double delta) {
  const Complex diag[] = {std::polar(1.0, -delta), std::polar(1.0, delta)};
  return UnitaryOperator(ComplexSquareMatrix::diagonal(diag));
}

// E2 with the fourth-order terms written out separately, straight from traces.
double e2_expanded(const UnitaryOperator& x) {
  const double d = static_cast<double>(x.dim());
  const Complex t1 = trace(x.matrix());
  const Complex t2 = trace(multiply(x.matrix(), x.matrix()));
  const double p2 = std::norm(t1);
  const double numerator = 2 * d * (d + 3) + 4 * (d + 2) * p2 + std::norm(t2) + p2 * p2 +
                           2 * (t2 * std::conj(t1) * std::conj(t1)).real();
  return numerator / (d * (d + 1) * (d + 2) * (d + 3));
}

double binomial(std::size_t n, std::size_t k) {
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / i;
  return out;
}

void expect_same_summary(const MomentSummary& a, const MomentSummary& b, double tol) {
  EXPECT_NEAR(a.F, b.F, tol);
  EXPECT_NEAR(a.D, b.D, tol);
  EXPECT_NEAR(a.r, b.r, tol);
  EXPECT_NEAR(a.E2, b.E2, tol);
}

}  // namespace

TEST(moments, identity) {
  for (std::size_t d : {2u, 4u, 16u}) {
    const auto m = fd_from_unitary(UnitaryOperator(ComplexSquareMatrix::identity(d)));
    const double dd = static_cast<double>(d);
    EXPECT_EQ(m.F, 1.0);
    EXPECT_EQ(m.D, 0.0);
    EXPECT_EQ(m.r, 0.0);
    EXPECT_EQ(m.E2, 1.0);
    EXPECT_EQ(m.P2, dd * dd);
    EXPECT_EQ(m.Q2, std::pow(dd + dd * dd, 2));
  }
}

TEST(moments, cz_closed_forms) {
  for (double phi : {0.01, 0.05, 0.1, 0.3, 0.7, 1.2, std::numbers::pi / 2, std::numbers::pi}) {
    const auto m = fd_from_unitary(build_cz_error(phi));
    EXPECT_NEAR(m.F, cz_F(phi), 1e-12) << phi;
    EXPECT_NEAR(m.D, cz_D(phi), 1e-12) << phi;
    EXPECT_NEAR(m.P2, 10.0 + 6.0 * std::cos(phi), 1e-12);
  }
  const auto m = fd_from_unitary(build_cz_error(std::numbers::pi / 2));
  EXPECT_NEAR(m.F, 0.7, 1e-12);
  EXPECT_NEAR(m.D, 0.15583874, 1e-8);
}

TEST(moments, cz_deficit_is_accurate_at_tiny_phase) {
  // r = (3/5) sin^2(phi/2) must keep full relative precision.
  for (double phi : {1e-3, 1e-5, 1e-7}) {
    const auto m = fd_from_unitary(build_cz_error(phi));
    const double r = 0.6 * std::pow(std::sin(phi / 2), 2);
    EXPECT_NEAR(m.r / r, 1.0, 1e-9) << phi;
  }
  const auto m = fd_from_unitary(build_cz_error(1e-3));
  EXPECT_NEAR(m.D / cz_D(1e-3), 1.0, 1e-6);
}

TEST(moments, single_qubit_reference) {
  for (double delta : {0.01, 0.1, 0.5}) {
    const auto m = fd_from_unitary(z_rotation(delta));
    EXPECT_NEAR(m.r, 2.0 / 3.0 * std::pow(std::sin(delta), 2), 1e-12);
  }
}

TEST(moments, qubit_collapse) {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 500; ++rep) {
    const auto m = fd_from_unitary(UnitaryOperator(support::haar_unitary(2, rng)));
    EXPECT_NEAR(m.D, d2_deviation(m.F), 1e-12);
  }
  EXPECT_EQ(d2_deviation(1.0), 0.0);
  EXPECT_NEAR(d2_deviation(0.9), 0.04472136, 1e-8);
}

TEST(moments, invariants_on_random_unitaries) {
  std::mt19937_64 rng(67);
  for (std::size_t d : {3u, 4u, 8u, 16u}) {
    for (int rep = 0; rep < 30; ++rep) {
      const UnitaryOperator x(support::haar_unitary(d, rng));
      const auto m = fd_from_unitary(x);
      const double dd = static_cast<double>(d);
      EXPECT_GE(m.F, 0.0);
      EXPECT_LE(m.F, 1.0);
      EXPECT_LE(m.D * m.D, m.F * (1 - m.F) + 1e-12);
      EXPECT_NEAR(m.E2, m.D * m.D + m.F * m.F, 1e-14);
      EXPECT_LE(m.P2, dd * dd);
      EXPECT_LE(m.Q2, std::pow(dd + dd * dd, 2));
      EXPECT_NEAR(m.E2, e2_expanded(x), 1e-12);
      EXPECT_NEAR(m.F, (dd + std::norm(trace(x.matrix()))) / (dd * (dd + 1)), 1e-13);
    }
  }
}

TEST(moments, expansion_identity_for_Q) {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 50; ++rep) {
    const auto x = support::haar_unitary(6, rng);
    const Complex t1 = trace(x), t2 = trace(multiply(x, x));
    const double lhs = std::norm(t2 + t1 * t1);
    const double rhs = std::norm(t2) + std::pow(std::norm(t1), 2) +
                       2 * (t2 * std::conj(t1) * std::conj(t1)).real();
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, lhs));
  }
}

TEST(moments, phase_and_basis_invariance) {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 20; ++rep) {
    const auto x = support::haar_unitary(8, rng);
    const auto base = fd_from_unitary(UnitaryOperator(x));
    ComplexSquareMatrix::Storage phased = x.eigen() * std::polar(1.0, 0.7 + rep);
    expect_same_summary(fd_from_unitary(UnitaryOperator(ComplexSquareMatrix(std::move(phased)))),
                        base, 1e-12);
    const auto v = support::haar_unitary(8, rng);
    ComplexSquareMatrix::Storage conj = v.eigen() * x.eigen() * v.eigen().adjoint();
    expect_same_summary(fd_from_unitary(UnitaryOperator(ComplexSquareMatrix(std::move(conj)))),
                        base, 1e-10);
  }
}

TEST(moments, pq_examples) {
  const auto id = pq_from_fd(1.0, 0.0, 4);
  EXPECT_NEAR(id.P2, 16.0, 1e-12);
  EXPECT_NEAR(id.Q2, 400.0, 1e-10);
  EXPECT_FALSE(id.clamped);
  EXPECT_FALSE(id.low_dimension);
  EXPECT_TRUE(pq_from_fd(1.0, 0.0, 2).low_dimension);

  for (double phi : {0.2, 1.0, 2.0}) {
    const auto pq = pq_from_fd(cz_F(phi), cz_D(phi), 4);
    EXPECT_NEAR(pq.P2, 10 + 6 * std::cos(phi), 1e-12);
    EXPECT_NEAR(pq.P2, 16 - 12 * std::pow(std::sin(phi / 2), 2), 1e-12);
  }
}

TEST(moments, pq_clamps_infeasible_inputs) {
  const auto low = pq_from_fd(0.05, 0.0, 4);  // F < 1/(d+1)
  EXPECT_TRUE(low.clamped);
  EXPECT_EQ(low.P2, 0.0);
  EXPECT_LT(low.P2_raw, 0.0);
  const auto high = pq_from_fd(1.0, 0.5, 4);
  EXPECT_TRUE(high.clamped);
  EXPECT_EQ(high.Q2, 400.0);
  EXPECT_GT(high.Q2_raw, 400.0);
  EXPECT_THROW(pq_from_fd(std::nan(""), 0.0, 4), std::invalid_argument);
}

TEST(moments, pq_round_trip) {
  std::mt19937_64 rng(79);
  for (std::size_t d : {4u, 8u}) {
    for (int rep = 0; rep < 100; ++rep) {
      const UnitaryOperator x(support::haar_unitary(d, rng));
      const Complex t1 = trace(x.matrix());
      const Complex t2 = trace(multiply(x.matrix(), x.matrix()));
      const double p2 = std::norm(t1), q2 = std::norm(t2 + t1 * t1);
      const auto m = fd_from_unitary(x);
      const auto pq = pq_from_fd(m.F, m.D, d);
      EXPECT_NEAR(pq.P2, p2, 1e-9 * std::max(1.0, p2));
      EXPECT_NEAR(pq.Q2, q2, 1e-9 * std::max(1.0, q2));
    }
  }
}

TEST(moments, single_fidelity_examples) {
  const UnitaryOperator id(ComplexSquareMatrix::identity(4));
  std::mt19937_64 rng(83);
  const auto psi = sample_haar_state(4, rng);
  EXPECT_NEAR(single_fidelity(id, psi), 1.0, 1e-14);

  const std::vector<Complex> e11 = {0.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(single_fidelity(build_cz_error(0.6), e11), 1.0, 1e-15);

  const double s = 1.0 / std::numbers::sqrt2;
  const std::vector<Complex> bell = {s, 0.0, 0.0, s};
  EXPECT_NEAR(single_fidelity(build_cz_error(std::numbers::pi), bell), 0.0, 1e-15);

  const std::vector<Complex> unnormalized = {1.0, 1.0, 0.0, 0.0};
  EXPECT_THROW(single_fidelity(id, unnormalized), std::invalid_argument);
  EXPECT_THROW(single_fidelity(id, std::vector<Complex>{1.0, 0.0}), std::invalid_argument);
}

TEST(moments, symmetric_projector_traces) {
  for (std::size_t d = 2; d <= 64; d *= 2) {
    EXPECT_DOUBLE_EQ(symmetric_projector_trace(d, 2), binomial(d + 1, 2));
    EXPECT_DOUBLE_EQ(symmetric_projector_trace(d, 4), binomial(d + 3, 4));
  }
  EXPECT_THROW(symmetric_projector_trace(4, 3), std::invalid_argument);
}

TEST(moments, haar_mc_identity) {
  const auto mc = haar_mc_moments(UnitaryOperator(ComplexSquareMatrix::identity(4)), 1000, 5);
  EXPECT_NEAR(mc.F_mc, 1.0, 1e-13);
  EXPECT_NEAR(mc.E2_mc, 1.0, 1e-13);
  EXPECT_EQ(mc.samples, 1000u);
  EXPECT_THROW(haar_mc_moments(UnitaryOperator(ComplexSquareMatrix::identity(4)), 99, 5),
               std::invalid_argument);
}

TEST(moments, haar_mc_is_deterministic) {
  const auto x = build_cz_error(0.3);
  const auto a = haar_mc_moments(x, 500, 9);
  const auto b = haar_mc_moments(x, 500, 9);
  EXPECT_EQ(a.F_mc, b.F_mc);
  EXPECT_EQ(a.E2_mc, b.E2_mc);
  EXPECT_NE(a.F_mc, haar_mc_moments(x, 500, 10).F_mc);
}

TEST(moments, haar_mc_matches_closed_forms) {
  const auto cz = build_cz_error(0.3);
  const auto cz_mc = haar_mc_moments(cz, 200000, 1);
  EXPECT_LE(std::abs(cz_mc.F_mc - cz_F(0.3)), 4 * cz_mc.stderr_F);

  const auto tof = build_model_error(ErrorModel::Toffoli, 0.2);
  const auto tof_mc = haar_mc_moments(tof, 100000, 2);
  EXPECT_LE(std::abs(tof_mc.E2_mc - fd_from_unitary(tof).E2), 4 * tof_mc.stderr_E2);
}
