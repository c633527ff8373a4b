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

#ifndef FDCERT_CLI_COMMANDS_HPP_
#define FDCERT_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "fdcert/fdcert.hpp"

namespace fdcert::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitVerifyFailed = 3,
};

/// 17 significant digits (round-trips any double), '.' separator, no locale.
std::string format_double(double value);

/// `steps` points from lo to hi inclusive; geometric spacing when log_grid.
std::vector<double> parameter_grid(double lo, double hi, int steps, bool log_grid);

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  ErrorModel model = ErrorModel::CZ;
  int n = 0;  ///< qubit count, qft only
  double min = 1e-3;
  double max = 1.0;
  int steps = 50;
  bool log_grid = false;
  double unitarity = 1.0;
};

struct SweepRow {
  ErrorModel model = ErrorModel::CZ;
  int n = 0;
  double param = 0.0;
  MomentSummary moments;
  CertificateBundle bundle;
};

std::vector<SweepRow> run_sweep(const SweepOptions& options);

/// Certificates for one error unitary, with u fixed by the caller.
SweepRow evaluate_point(ErrorModel model, int n, double param, const UnitaryOperator& x,
                        double unitarity);

inline constexpr const char* kSweepHeader =
    "model,n,param,F,D,r,d_exact,b_fidelity_only,b_ru_at_u,b_fd,b_hybrid,flags";

void write_sweep_row(std::ostream& out, const SweepRow& row);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------
// estimate

struct EstimateOptions {
  ErrorModel model = ErrorModel::CZ;
  int n = 0;
  double param = 0.0;
  std::size_t samples = 500;  ///< M, input states per run
  int shots = 1000;           ///< N, shots per state
  std::uint64_t seed = 0;
  int repeats = 1;
};

struct EstimateRow {
  ErrorModel model = ErrorModel::CZ;
  int n = 0;
  double param = 0.0;
  EstimationResult estimate;
  CertificateBundle bundle;
};

/// Repeat i uses seed + i.
std::vector<EstimateRow> run_estimate(const EstimateOptions& options);

inline constexpr const char* kEstimateHeader =
    "model,n,param,M,N,seed,F_hat,D_hat,D2_hat,truncated,b_fidelity_only,b_fd,flags";

void write_estimate_csv(std::ostream& out, const std::vector<EstimateRow>& rows);

// ---------------------------------------------------------------------------
// moments

void print_moments(std::ostream& out, const SweepRow& row, bool csv);

// ---------------------------------------------------------------------------
// verify

enum class VerifyLevel { kQuick, kFull };

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double expected = 0.0;
  std::string detail;
};

/// The (F, D) diamond bound used by the tightness and validity checks. Tests
/// inject a deliberately broken one to confirm the suite notices.
using FdBound = std::function<double(double F, double D, std::size_t d)>;

std::vector<CheckResult> run_verify(VerifyLevel level, const FdBound& fd_bound = bound_fd);

void print_verify_report(std::ostream& out, const std::vector<CheckResult>& results);

// ---------------------------------------------------------------------------

/// Full command-line entry point. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fdcert::cli

#endif  // FDCERT_CLI_COMMANDS_HPP_
