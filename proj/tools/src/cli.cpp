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

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "fdcert_cli/commands.hpp"

namespace fdcert::cli {

namespace {

const std::map<std::string, ErrorModel> kModelNames = {
    {"cz", ErrorModel::CZ}, {"toffoli", ErrorModel::Toffoli}, {"qft", ErrorModel::QFT}};

// Writes the whole buffer in one go so a failed run never leaves a partial file.
void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  file << contents;
  file.close();
  if (!file) throw std::invalid_argument("failed writing output file: " + path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Worst-case certificates for coherent gate errors from average fidelity "
               "and its fluctuation"};
  app.name("fdcert");
  app.require_subcommand(1);

  SweepOptions sweep;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds over a parameter grid, written as CSV");
  sweep_cmd->add_option("--model", sweep.model, "Error model")
      ->required()
      ->transform(CLI::CheckedTransformer(kModelNames, CLI::ignore_case));
  sweep_cmd->add_option("--n", sweep.n, "Qubit count (qft only, 2..10)");
  sweep_cmd->add_option("--min", sweep.min, "Smallest parameter")->capture_default_str();
  sweep_cmd->add_option("--max", sweep.max, "Largest parameter")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "Grid points")->capture_default_str();
  sweep_cmd->add_flag("--log-grid", sweep.log_grid, "Geometric instead of linear spacing");
  sweep_cmd->add_option("--unitarity", sweep.unitarity, "u used for the b_ru column")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

  EstimateOptions estimate;
  std::string estimate_out;
  auto* estimate_cmd =
      app.add_subcommand("estimate", "Simulate the sampling protocol and certify from estimates");
  estimate_cmd->add_option("--model", estimate.model, "Error model")
      ->required()
      ->transform(CLI::CheckedTransformer(kModelNames, CLI::ignore_case));
  estimate_cmd->add_option("--n", estimate.n, "Qubit count (qft only, 2..10)");
  estimate_cmd->add_option("--param", estimate.param, "Error parameter")->required();
  estimate_cmd->add_option("--samples", estimate.samples, "Random input states M")
      ->capture_default_str();
  estimate_cmd->add_option("--shots", estimate.shots, "Shots per state N")->capture_default_str();
  estimate_cmd->add_option("--seed", estimate.seed, "Base seed")->capture_default_str();
  estimate_cmd->add_option("--repeats", estimate.repeats, "Runs with seeds seed, seed+1, ...")
      ->capture_default_str();
  estimate_cmd->add_option("--out", estimate_out, "Output CSV path")->required();

  ErrorModel moments_model = ErrorModel::CZ;
  double moments_param = 0.0;
  int moments_n = 0;
  bool moments_csv = false;
  auto* moments_cmd = app.add_subcommand("moments", "Print moments and bounds for one point");
  moments_cmd->add_option("--model", moments_model, "Error model")
      ->required()
      ->transform(CLI::CheckedTransformer(kModelNames, CLI::ignore_case));
  moments_cmd->add_option("--param", moments_param, "Error parameter")->required();
  moments_cmd->add_option("--n", moments_n, "Qubit count (qft only, 2..10)");
  moments_cmd->add_flag("--csv", moments_csv, "Emit one CSV row in the sweep schema");

  bool verify_full = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in oracle checks");
  verify_cmd->add_flag("--full", verify_full, "Full-scale statistical checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      std::ostringstream csv;
      write_sweep_csv(csv, run_sweep(sweep));
      write_file(sweep_out, csv.str());
    } else if (*estimate_cmd) {
      std::ostringstream csv;
      write_estimate_csv(csv, run_estimate(estimate));
      write_file(estimate_out, csv.str());
    } else if (*moments_cmd) {
      const int qubits = model_qubits(moments_model, moments_n);
      const auto x = build_model_error(moments_model, moments_param, moments_n);
      print_moments(out, evaluate_point(moments_model, qubits, moments_param, x, 1.0),
                    moments_csv);
    } else if (*verify_cmd) {
      const auto results = run_verify(verify_full ? VerifyLevel::kFull : VerifyLevel::kQuick);
      print_verify_report(out, results);
      for (const auto& r : results) {
        if (!r.passed) return kExitVerifyFailed;
      }
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace fdcert::cli
