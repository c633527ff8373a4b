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

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "fdcert_cli/commands.hpp"

namespace fdcert::cli {

namespace {

// Builds error unitaries for one model, constructing the ideal circuit once.
class ModelEvaluator {
 public:
  ModelEvaluator(ErrorModel model, int n) : model_(model), n_(model_qubits(model, n)) {
    if (model == ErrorModel::CZ) return;
    circuit_ = model == ErrorModel::Toffoli ? toffoli_circuit() : qft_circuit(n_);
    ideal_.emplace(circuit_unitary(*circuit_));
  }

  int qubits() const { return n_; }

  UnitaryOperator error(double param) const {
    if (model_ == ErrorModel::CZ) return build_cz_error(param);
    const UnitaryOperator implemented(circuit_unitary(*circuit_, param));
    return error_unitary(*ideal_, implemented);
  }

 private:
  ErrorModel model_;
  int n_;
  std::optional<CircuitSpec> circuit_;
  std::optional<UnitaryOperator> ideal_;
};

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<double> parameter_grid(double lo, double hi, int steps, bool log_grid) {
  require_finite(lo, "grid minimum");
  require_finite(hi, "grid maximum");
  if (steps < 2) throw std::invalid_argument("steps must be at least 2");
  if (!(lo < hi)) throw std::invalid_argument("grid minimum must be below maximum");
  if (log_grid && lo <= 0.0) throw std::invalid_argument("log grid needs a positive minimum");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double last = static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = i / last;
    grid[static_cast<std::size_t>(i)] =
        log_grid ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                 : lo + t * (hi - lo);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SweepRow evaluate_point(ErrorModel model, int n, double param, const UnitaryOperator& x,
                        double unitarity) {
  SweepRow row;
  row.model = model;
  row.n = n;
  row.param = param;
  row.moments = fd_from_unitary(x);
  row.bundle = certify_unitary(x, unitarity);
  return row;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  require_finite(options.unitarity, "unitarity");
  const auto grid = parameter_grid(options.min, options.max, options.steps, options.log_grid);
  const ModelEvaluator evaluator(options.model, options.n);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double param : grid) {
    rows.push_back(evaluate_point(options.model, evaluator.qubits(), param,
                                  evaluator.error(param), options.unitarity));
  }
  return rows;
}

void write_sweep_row(std::ostream& out, const SweepRow& row) {
  const auto& b = row.bundle;
  out << model_name(row.model) << ',' << row.n << ',' << format_double(row.param) << ','
      << format_double(row.moments.F) << ',' << format_double(row.moments.D) << ','
      << format_double(row.moments.r) << ','
      << format_double(b.d_exact.value_or(std::nan(""))) << ','
      << format_double(b.b_fidelity_only) << ','
      << format_double(b.b_ru.value_or(std::nan(""))) << ',' << format_double(b.b_fd) << ','
      << format_double(b.b_hybrid) << ',' << b.flags << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& row : rows) write_sweep_row(out, row);
}

std::vector<EstimateRow> run_estimate(const EstimateOptions& options) {
  require_finite(options.param, "param");
  if (options.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  const ModelEvaluator evaluator(options.model, options.n);
  const auto x = evaluator.error(options.param);
  std::vector<EstimateRow> rows;
  for (int i = 0; i < options.repeats; ++i) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
    EstimateRow row;
    row.model = options.model;
    row.n = evaluator.qubits();
    row.param = options.param;
    row.estimate =
        estimate_moments(simulate_protocol(x, options.samples, options.shots, seed), seed);
    row.bundle = certify_from_estimates(row.estimate, x.dim());
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_estimate_csv(std::ostream& out, const std::vector<EstimateRow>& rows) {
  out << kEstimateHeader << '\n';
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    out << model_name(row.model) << ',' << row.n << ',' << format_double(row.param) << ','
        << e.M << ',' << e.N << ',' << e.seed << ',' << format_double(e.F_hat) << ','
        << format_double(e.D_hat) << ',' << format_double(e.D2_hat) << ','
        << (e.truncated ? 1 : 0) << ',' << format_double(row.bundle.b_fidelity_only) << ','
        << format_double(row.bundle.b_fd) << ',' << row.bundle.flags << '\n';
  }
}

void print_moments(std::ostream& out, const SweepRow& row, bool csv) {
  if (csv) {
    out << kSweepHeader << '\n';
    write_sweep_row(out, row);
    return;
  }
  const auto& m = row.moments;
  const auto& b = row.bundle;
  const auto line = [&out](const char* key, const std::string& value) {
    out << key << ": " << value << '\n';
  };
  line("model", std::string(model_name(row.model)));
  line("qubits", std::to_string(row.n));
  line("dim", std::to_string(m.dim));
  line("param", format_double(row.param));
  line("F", format_double(m.F));
  line("D", format_double(m.D));
  line("r", format_double(m.r));
  line("E2", format_double(m.E2));
  line("P2", format_double(m.P2));
  line("Q2", format_double(m.Q2));
  if (m.dim >= 4) line("c", format_double(b.c_value));
  line("d_exact", format_double(b.d_exact.value_or(std::nan(""))));
  line("b_fidelity_only", format_double(b.b_fidelity_only));
  line("b_ru_at_u", format_double(b.b_ru.value_or(std::nan(""))));
  line("b_fd", format_double(b.b_fd));
  line("b_hybrid", format_double(b.b_hybrid));
  line("hybrid_source", std::string(bound_source_name(b.hybrid_source)));
  line("flags", std::to_string(b.flags));
}

}  // namespace fdcert::cli
