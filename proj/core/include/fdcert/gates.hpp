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

#ifndef FDCERT_GATES_HPP_
#define FDCERT_GATES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdcert/linalg.hpp"

namespace fdcert {

enum class GateKind { H, T, Tdag, CNOT, CP, CZPhase };

std::string_view gate_kind_name(GateKind kind);

/// One primitive gate on an ordered list of 1-based qubit targets. `angle` is
/// the CP phase or the CZ-phase offset and is ignored for other kinds. For
/// CNOT the first target is the control.
struct GateSpec {
  GateKind kind;
  std::vector<int> targets;
  double angle = 0.0;

  static GateSpec h(int q) { return {GateKind::H, {q}}; }
  static GateSpec t(int q) { return {GateKind::T, {q}}; }
  static GateSpec tdag(int q) { return {GateKind::Tdag, {q}}; }
  static GateSpec cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }
  static GateSpec cp(int a, int b, double theta) { return {GateKind::CP, {a, b}, theta}; }
  static GateSpec cz_phase(int a, int b, double phi) {
    return {GateKind::CZPhase, {a, b}, phi};
  }

  /// Throws std::invalid_argument on a wrong target count or non-finite angle.
  void validate() const;
};

/// Gates in application order: gates.front() acts on the state first.
struct CircuitSpec {
  int n = 0;
  std::vector<GateSpec> gates;

  void validate() const;
};

/// Textbook matrix of a primitive on 2^|targets| dimensions.
ComplexSquareMatrix ideal_gate(const GateSpec& spec);

/// Coherently over-rotated primitive:
///   T, Tdag: exp(-i eps Z/2) G      H: exp(-i eps H/2) H
///   CNOT:    exp(-i eps |1><1| (x) X) CNOT
///   CP(theta): CP((1 + eps) theta)
/// CZPhase has no over-rotation rule and is rejected.
ComplexSquareMatrix overrotated_gate(const GateSpec& spec, double epsilon);

/// Operator product G_L ... G_1 of the circuit. With `epsilon` set, every
/// primitive is replaced by its over-rotated version.
ComplexSquareMatrix circuit_unitary(const CircuitSpec& circuit,
                                    std::optional<double> epsilon = std::nullopt);

/// Fifteen-gate Clifford+T Toffoli (controls 1, 2; target 3), in application order.
CircuitSpec toffoli_circuit();

/// n-qubit QFT from Hadamards and controlled phases, bit-reversal swaps omitted.
CircuitSpec qft_circuit(int n);

struct UnitaryPair {
  UnitaryOperator ideal;
  UnitaryOperator implemented;
};

/// Two-qubit phase miscalibration error diag(1, 1, 1, e^{i phi_eps}).
UnitaryOperator build_cz_error(double phi_epsilon);
UnitaryPair build_toffoli_pair(double epsilon);
/// Requires 2 <= n <= 10.
UnitaryPair build_qft_pair(int n, double epsilon);

/// X = ideal^dag * implemented.
UnitaryOperator error_unitary(const UnitaryOperator& ideal,
                              const UnitaryOperator& implemented);

/// The three benchmark error models exposed to the command line.
enum class ErrorModel { CZ, Toffoli, QFT };

std::string_view model_name(ErrorModel model);
/// Parses "cz", "toffoli" or "qft"; nullopt otherwise.
std::optional<ErrorModel> parse_model(std::string_view name);
/// Qubit count implied by the model (n for QFT, validated).
int model_qubits(ErrorModel model, int qft_n);
/// Effective error unitary of a model at one parameter value (phi_eps or eps).
UnitaryOperator build_model_error(ErrorModel model, double param, int qft_n = 0);

}  // namespace fdcert

#endif  // FDCERT_GATES_HPP_
