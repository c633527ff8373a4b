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

#include "fdcert/gates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fdcert {

namespace {

std::size_t expected_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::T:
    case GateKind::Tdag:
      return 1;
    case GateKind::CNOT:
    case GateKind::CP:
    case GateKind::CZPhase:
      return 2;
  }
  return 0;
}

ComplexSquareMatrix hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return ComplexSquareMatrix::from_rows({{s, s}, {s, -s}});
}

ComplexSquareMatrix phase_diag4(double phi) {
  const Complex diag[] = {1.0, 1.0, 1.0, std::polar(1.0, phi)};
  return ComplexSquareMatrix::diagonal(diag);
}

ComplexSquareMatrix cnot_matrix() {
  return ComplexSquareMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                         {0.0, 1.0, 0.0, 0.0},
                                         {0.0, 0.0, 0.0, 1.0},
                                         {0.0, 0.0, 1.0, 0.0}});
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::T: return "T";
    case GateKind::Tdag: return "Tdag";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CP: return "CP";
    case GateKind::CZPhase: return "CZ_phase";
  }
  return "?";
}

void GateSpec::validate() const {
  if (targets.size() != expected_arity(kind)) {
    std::ostringstream msg;
    msg << gate_kind_name(kind) << " expects " << expected_arity(kind) << " target(s), got "
        << targets.size();
    throw std::invalid_argument(msg.str());
  }
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw std::invalid_argument("two-qubit gate with duplicate targets");
  }
  if (!std::isfinite(angle)) throw std::invalid_argument("gate angle must be finite");
}

void CircuitSpec::validate() const {
  if (n < 1) throw std::invalid_argument("circuit needs at least one qubit");
  for (const auto& g : gates) {
    g.validate();
    for (int q : g.targets) {
      if (q < 1 || q > n) throw std::invalid_argument("circuit target index out of range");
    }
  }
}

ComplexSquareMatrix ideal_gate(const GateSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case GateKind::H:
      return hadamard();
    case GateKind::T: {
      const Complex diag[] = {1.0, std::polar(1.0, std::numbers::pi / 4)};
      return ComplexSquareMatrix::diagonal(diag);
    }
    case GateKind::Tdag: {
      const Complex diag[] = {1.0, std::polar(1.0, -std::numbers::pi / 4)};
      return ComplexSquareMatrix::diagonal(diag);
    }
    case GateKind::CNOT:
      return cnot_matrix();
    case GateKind::CP:
    case GateKind::CZPhase:
      return phase_diag4(spec.angle);
  }
  throw std::invalid_argument("ideal_gate: unknown gate kind");
}

ComplexSquareMatrix overrotated_gate(const GateSpec& spec, double epsilon) {
  spec.validate();
  if (!std::isfinite(epsilon)) throw std::invalid_argument("over-rotation must be finite");
  switch (spec.kind) {
    case GateKind::T:
    case GateKind::Tdag:
      return multiply(exp_involutory(paulis::z(), epsilon / 2), ideal_gate(spec));
    case GateKind::H: {
      const auto h = hadamard();
      return multiply(exp_involutory(h, epsilon / 2), h);
    }
    case GateKind::CNOT: {
      const auto generator = kron(paulis::projector1(), paulis::x());
      return multiply(exp_projector_squared(generator, epsilon), cnot_matrix());
    }
    case GateKind::CP:
      return phase_diag4((1.0 + epsilon) * spec.angle);
    case GateKind::CZPhase:
      break;
  }
  throw std::invalid_argument(std::string("overrotated_gate: no over-rotation model for ") +
                              std::string(gate_kind_name(spec.kind)));
}

ComplexSquareMatrix circuit_unitary(const CircuitSpec& circuit,
                                    std::optional<double> epsilon) {
  circuit.validate();
  auto u = ComplexSquareMatrix::identity(std::size_t{1} << circuit.n);
  for (const auto& g : circuit.gates) {
    const auto local = epsilon ? overrotated_gate(g, *epsilon) : ideal_gate(g);
    apply_gate_left(u, local, g.targets, circuit.n);
  }
  return u;
}

CircuitSpec toffoli_circuit() {
  // Written as an operator product the decomposition reads
  //   CNOT12 T2† T1 H3 CNOT12 T3 T2 CNOT13 T3† CNOT23 T3 CNOT13 T3† CNOT23 H3,
  // so the rightmost H3 acts first.
  return CircuitSpec{
      3,
      {GateSpec::h(3), GateSpec::cnot(2, 3), GateSpec::tdag(3), GateSpec::cnot(1, 3),
       GateSpec::t(3), GateSpec::cnot(2, 3), GateSpec::tdag(3), GateSpec::cnot(1, 3),
       GateSpec::t(2), GateSpec::t(3), GateSpec::cnot(1, 2), GateSpec::h(3),
       GateSpec::t(1), GateSpec::tdag(2), GateSpec::cnot(1, 2)}};
}

CircuitSpec qft_circuit(int n) {
  if (n < 1) throw std::invalid_argument("qft_circuit: n must be positive");
  CircuitSpec circuit{n, {}};
  for (int j = 1; j <= n; ++j) {
    circuit.gates.push_back(GateSpec::h(j));
    for (int k = j + 1; k <= n; ++k) {
      circuit.gates.push_back(GateSpec::cp(k, j, std::numbers::pi / std::ldexp(1.0, k - j)));
    }
  }
  return circuit;
}

UnitaryOperator build_cz_error(double phi_epsilon) {
  if (!std::isfinite(phi_epsilon)) throw std::invalid_argument("phase error must be finite");
  return UnitaryOperator(phase_diag4(phi_epsilon));
}

UnitaryPair build_toffoli_pair(double epsilon) {
  const auto circuit = toffoli_circuit();
  return {UnitaryOperator(circuit_unitary(circuit)),
          UnitaryOperator(circuit_unitary(circuit, epsilon))};
}

UnitaryPair build_qft_pair(int n, double epsilon) {
  if (n < 2 || n > 10) throw std::invalid_argument("build_qft_pair: n must be in [2, 10]");
  const auto circuit = qft_circuit(n);
  return {UnitaryOperator(circuit_unitary(circuit)),
          UnitaryOperator(circuit_unitary(circuit, epsilon))};
}

UnitaryOperator error_unitary(const UnitaryOperator& ideal,
                              const UnitaryOperator& implemented) {
  if (ideal.dim() != implemented.dim()) {
    throw std::invalid_argument("error_unitary: dimension mismatch");
  }
  ComplexSquareMatrix::Storage x = ideal.matrix().eigen().adjoint() * implemented.matrix().eigen();
  return UnitaryOperator(ComplexSquareMatrix(std::move(x)));
}

std::string_view model_name(ErrorModel model) {
  switch (model) {
    case ErrorModel::CZ: return "cz";
    case ErrorModel::Toffoli: return "toffoli";
    case ErrorModel::QFT: return "qft";
  }
  return "?";
}

std::optional<ErrorModel> parse_model(std::string_view name) {
  if (name == "cz") return ErrorModel::CZ;
  if (name == "toffoli") return ErrorModel::Toffoli;
  if (name == "qft") return ErrorModel::QFT;
  return std::nullopt;
}

int model_qubits(ErrorModel model, int qft_n) {
  switch (model) {
    case ErrorModel::CZ: return 2;
    case ErrorModel::Toffoli: return 3;
    case ErrorModel::QFT:
      if (qft_n < 2 || qft_n > 10) throw std::invalid_argument("qft requires 2 <= n <= 10");
      return qft_n;
  }
  throw std::invalid_argument("unknown model");
}

UnitaryOperator build_model_error(ErrorModel model, double param, int qft_n) {
  switch (model) {
    case ErrorModel::CZ:
      return build_cz_error(param);
    case ErrorModel::Toffoli: {
      const auto pair = build_toffoli_pair(param);
      return error_unitary(pair.ideal, pair.implemented);
    }
    case ErrorModel::QFT: {
      const auto pair = build_qft_pair(model_qubits(model, qft_n), param);
      return error_unitary(pair.ideal, pair.implemented);
    }
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace fdcert
