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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fdcert_cli/commands.hpp"

namespace fdcert::cli {

namespace {

constexpr double kCzPhases[] = {0.01, 0.05, 0.1, 0.3, 0.7, 1.2, std::numbers::pi / 2,
                                std::numbers::pi};

double cz_sin2(double phi) { return std::pow(std::sin(phi / 2), 2); }

CheckResult upper_limit(std::string name, double measured, double limit, std::string detail = {}) {
  return {std::move(name), measured <= limit, measured, limit, std::move(detail)};
}

CheckResult check_cz_closed_forms() {
  double worst = 0.0;
  for (double phi : kCzPhases) {
    const auto m = fd_from_unitary(build_cz_error(phi));
    worst = std::max(worst, std::abs(m.F - (1.0 - 0.6 * cz_sin2(phi))));
    worst = std::max(worst, std::abs(m.D - 0.2 * std::sqrt(17.0 / 7.0) * cz_sin2(phi)));
  }
  return upper_limit("cz_closed_forms", worst, 1e-12, "max |F - F_cf|, |D - D_cf|");
}

CheckResult check_cz_certificate(const FdBound& fd_bound) {
  // Smallest margin b_fd - d_exact; negative means the bound was violated.
  double margin = std::numeric_limits<double>::infinity();
  double closed_form = 0.0;
  for (double phi : kCzPhases) {
    const auto x = build_cz_error(phi);
    const auto m = fd_from_unitary(x);
    const double exact = diamond_exact(x);
    closed_form = std::max(closed_form, std::abs(exact - std::abs(std::sin(phi / 2))));
    margin = std::min(margin, fd_bound(m.F, m.D, x.dim()) - exact);
  }
  std::ostringstream detail;
  detail << "min (b_fd - d_exact); max |d_exact - |sin(phi/2)|| = " << closed_form;
  return {"cz_certificate", margin >= -1e-12 && closed_form <= 1e-12, margin, 0.0, detail.str()};
}

CheckResult check_single_qubit() {
  double worst = 0.0;
  for (double delta : {0.01, 0.1, 0.5}) {
    const Complex diag[] = {std::polar(1.0, -delta), std::polar(1.0, delta)};
    const UnitaryOperator x(ComplexSquareMatrix::diagonal(diag));
    worst = std::max(worst, std::abs(fd_from_unitary(x).r - 2.0 / 3.0 * std::pow(std::sin(delta), 2)));
    worst = std::max(worst, std::abs(diamond_exact(x) - std::sin(delta)));
  }
  return upper_limit("single_qubit_reference", worst, 1e-9, "max |r - r_cf|, |d_exact - sin|");
}

CheckResult check_ru_collapse() {
  double worst = 0.0;
  for (std::size_t d : {2u, 4u, 8u, 1024u}) {
    const double dd = static_cast<double>(d);
    const double r = 0.5 / (dd * dd * dd * (dd + 1.0));
    const double ratio = bound_ru(r, 1.0, d) / bound_fidelity_only(r, d);
    worst = std::max(worst, std::abs(ratio / (dd / std::numbers::sqrt2) - 1.0));
  }
  return upper_limit("ru_collapse_ratio", worst, 1e-12, "max relative |ratio - d/sqrt2|");
}

CheckResult check_validity(VerifyLevel level, const FdBound& fd_bound) {
  const bool full = level == VerifyLevel::kFull;
  struct Sweep {
    ErrorModel model;
    int n;
    double lo, hi;
    int steps;
  };
  std::vector<Sweep> sweeps = {{ErrorModel::CZ, 0, 1e-3, std::numbers::pi, full ? 50 : 10},
                               {ErrorModel::Toffoli, 0, 1e-3, 0.5, full ? 50 : 10}};
  for (int n = 2; n <= (full ? 4 : 3); ++n) {
    sweeps.push_back({ErrorModel::QFT, n, 1e-3, 0.3, full ? 30 : 10});
  }
  double worst = -1.0;
  int points = 0;
  for (const auto& s : sweeps) {
    SweepOptions options;
    options.model = s.model;
    options.n = s.n;
    options.min = s.lo;
    options.max = s.hi;
    options.steps = s.steps;
    for (const auto& row : run_sweep(options)) {
      const double exact = *row.bundle.d_exact;
      const double b_fd = fd_bound(row.moments.F, row.moments.D, row.moments.dim);
      worst = std::max({worst, exact - b_fd, exact - row.bundle.b_fidelity_only,
                        exact - *row.bundle.b_ru});
      ++points;
    }
  }
  return upper_limit("bound_validity", worst, 1e-9,
                     "max(d_exact - bound) over " + std::to_string(points) + " points");
}

CheckResult check_haar_mc(VerifyLevel level) {
  const std::size_t samples = level == VerifyLevel::kFull ? 100000 : 20000;
  const UnitaryOperator cases[] = {build_cz_error(0.3), build_model_error(ErrorModel::Toffoli, 0.2),
                                   build_model_error(ErrorModel::QFT, 0.1, 3)};
  double worst = 0.0;
  std::uint64_t seed = 11;
  for (const auto& x : cases) {
    const auto exact = fd_from_unitary(x);
    const auto mc = haar_mc_moments(x, samples, seed++);
    worst = std::max(worst, std::abs(mc.F_mc - exact.F) / mc.stderr_F);
    worst = std::max(worst, std::abs(mc.E2_mc - exact.E2) / mc.stderr_E2);
  }
  return upper_limit("haar_mc_agreement", worst, 5.0, "max deviation in standard errors");
}

CheckResult check_exhaustive_estimators() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      double mean_f = 0.0, mean_sq = 0.0;
      for (unsigned outcome = 0; outcome < (1u << n); ++outcome) {
        const int k = std::popcount(outcome);
        const double w = std::pow(f, k) * std::pow(1.0 - f, n - k);
        mean_f += w * k / n;
        mean_sq += w * k * (k - 1.0) / (n * (n - 1.0));
      }
      worst = std::max({worst, std::abs(mean_f - f), std::abs(mean_sq - f * f)});
    }
  }
  return upper_limit("estimator_exhaustive", worst, 1e-14, "max |E[estimate] - target|");
}

struct SeedStatistics {
  double mean_f = 0, var_f = 0, mean_d2 = 0, var_d2 = 0;
};

SeedStatistics protocol_seed_statistics(const UnitaryOperator& x, int seeds, std::size_t M,
                                        int N) {
  double sf = 0, sff = 0, sd = 0, sdd = 0;
  for (int s = 0; s < seeds; ++s) {
    const auto est = estimate_moments(simulate_protocol(x, M, N, 100000 + s));
    sf += est.F_hat;
    sff += est.F_hat * est.F_hat;
    sd += est.D2_hat;
    sdd += est.D2_hat * est.D2_hat;
  }
  SeedStatistics out;
  out.mean_f = sf / seeds;
  out.var_f = (sff - seeds * out.mean_f * out.mean_f) / (seeds - 1);
  out.mean_d2 = sd / seeds;
  out.var_d2 = (sdd - seeds * out.mean_d2 * out.mean_d2) / (seeds - 1);
  return out;
}

std::vector<CheckResult> check_protocol(VerifyLevel level) {
  const int seeds = level == VerifyLevel::kFull ? 2000 : 200;
  const std::size_t M = 100;
  const int N = 50;
  const auto x = build_cz_error(0.3);
  const auto exact = fd_from_unitary(x);
  const auto stats = protocol_seed_statistics(x, seeds, M, N);
  const std::string detail = std::to_string(seeds) + " seeds, M=100, N=50";
  std::vector<CheckResult> out;
  out.push_back(upper_limit("estimator_unbiased_F",
                            std::abs(stats.mean_f - exact.F) / std::sqrt(stats.var_f / seeds), 4.0,
                            "|mean F_hat - F| in standard errors; " + detail));
  out.push_back(upper_limit(
      "estimator_unbiased_D2",
      std::abs(stats.mean_d2 - exact.D * exact.D) / std::sqrt(stats.var_d2 / seeds), 4.0,
      "|mean D2_hat - D^2| in standard errors; " + detail));
  const double predicted =
      exact.D * exact.D / M + (exact.F - exact.E2) / (static_cast<double>(M) * N);
  const double ratio = stats.var_f / predicted;
  out.push_back({"estimator_variance", ratio >= 1.0 / 1.5 && ratio <= 1.5, ratio, 1.0,
                 "Var(F_hat) / predicted, accepted within a factor 1.5; " + detail});
  return out;
}

CheckResult check_witness() {
  // Spectra confined to an arc. The two-angle witness exists only when its
  // bulk cosine stays at most 1; otherwise construction must be refused.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> phase(-0.6, 0.6);
  double worst = 0.0;
  int built = 0;
  int refused = 0;
  for (std::size_t d : {4u, 8u}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Complex> diag(d);
      for (auto& z : diag) z = std::polar(1.0, phase(rng));
      const auto m = fd_from_unitary(UnitaryOperator(ComplexSquareMatrix::diagonal(diag)));
      const double c = certified_overlap(m.F, m.D, d);
      const double bulk =
          (std::sqrt(pq_from_fd(m.F, m.D, d).P2) - 2.0 * c) / (static_cast<double>(d) - 2.0);
      if (bulk > 1.0 + 1e-12) {
        try {
          (void)tightness_witness(m.F, m.D, d);
          worst = std::numeric_limits<double>::infinity();
        } catch (const std::invalid_argument&) {
          ++refused;
        }
        continue;
      }
      const auto w = tightness_witness(m.F, m.D, d);
      const auto mw = fd_from_unitary(w);
      worst = std::max({worst, std::abs(mw.F - m.F), std::abs(mw.D - m.D),
                        std::abs(min_overlap_exact(w) - c)});
      ++built;
    }
  }
  std::ostringstream detail;
  detail << "max |F*, D*, m* - targets| over " << built << " witnesses, " << refused
         << " inadmissible";
  return {"tightness_witness", worst <= 1e-9 && built > 0, worst, 1e-9, detail.str()};
}

}  // namespace

std::vector<CheckResult> run_verify(VerifyLevel level, const FdBound& fd_bound) {
  std::vector<CheckResult> out;
  const auto guarded = [&out](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back({name, false, std::nan(""), std::nan(""), e.what()});
    }
  };
  guarded("cz_closed_forms", [&] { out.push_back(check_cz_closed_forms()); });
  guarded("cz_certificate", [&] { out.push_back(check_cz_certificate(fd_bound)); });
  guarded("single_qubit_reference", [&] { out.push_back(check_single_qubit()); });
  guarded("ru_collapse_ratio", [&] { out.push_back(check_ru_collapse()); });
  guarded("bound_validity", [&] { out.push_back(check_validity(level, fd_bound)); });
  guarded("haar_mc_agreement", [&] { out.push_back(check_haar_mc(level)); });
  guarded("estimator_exhaustive", [&] { out.push_back(check_exhaustive_estimators()); });
  guarded("estimator_protocol", [&] {
    for (auto& r : check_protocol(level)) out.push_back(std::move(r));
  });
  guarded("tightness_witness", [&] { out.push_back(check_witness()); });
  return out;
}

void print_verify_report(std::ostream& out, const std::vector<CheckResult>& results) {
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << format_double(r.measured)
        << " expected=" << format_double(r.expected);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
  }
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) +
                            " checks failed")
      << '\n';
}

}  // namespace fdcert::cli
