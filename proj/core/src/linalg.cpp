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

#include "fdcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace fdcert {

namespace {

using Index = Eigen::Index;

constexpr double kGeneratorTolerance = 1e-10;
// Hermitian-part eigenvalues closer than this are treated as one eigenspace.
constexpr double kDegeneracyGap = 1e-9;
constexpr double kUnitCircleTolerance = 1e-8;

void require_same_dim(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
}

bool is_hermitian(const ComplexSquareMatrix& g, double tol) {
  return (g.eigen() - g.eigen().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// Bit position (from the least significant end) of 1-based qubit q among n.
int bit_of(int qubit, int n) { return n - qubit; }

}  // namespace

ComplexSquareMatrix::ComplexSquareMatrix(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("ComplexSquareMatrix: dim must be >= 1");
  m_ = Storage::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
}

ComplexSquareMatrix::ComplexSquareMatrix(std::size_t dim,
                                         std::span<const Complex> entries)
    : ComplexSquareMatrix(dim) {
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("ComplexSquareMatrix: expected dim*dim entries");
  }
  std::copy(entries.begin(), entries.end(), m_.data());
  if (!all_finite()) throw std::invalid_argument("ComplexSquareMatrix: non-finite entry");
}

ComplexSquareMatrix::ComplexSquareMatrix(Storage storage) : m_(std::move(storage)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw std::invalid_argument("ComplexSquareMatrix: storage must be square and non-empty");
  }
  if (!all_finite()) throw std::invalid_argument("ComplexSquareMatrix: non-finite entry");
}

ComplexSquareMatrix ComplexSquareMatrix::identity(std::size_t dim) {
  ComplexSquareMatrix out(dim);
  out.m_.setIdentity();
  return out;
}

ComplexSquareMatrix ComplexSquareMatrix::diagonal(std::span<const Complex> diag) {
  ComplexSquareMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  if (!out.all_finite()) throw std::invalid_argument("ComplexSquareMatrix: non-finite entry");
  return out;
}

ComplexSquareMatrix ComplexSquareMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t dim = rows.size();
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) throw std::invalid_argument("from_rows: matrix is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexSquareMatrix(dim, entries);
}

bool ComplexSquareMatrix::all_finite() const {
  return std::all_of(m_.data(), m_.data() + m_.size(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double max_abs_diff(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

ComplexSquareMatrix multiply(const ComplexSquareMatrix& a,
                             const ComplexSquareMatrix& b) {
  require_same_dim(a, b, "multiply");
  ComplexSquareMatrix::Storage out = a.eigen() * b.eigen();
  return ComplexSquareMatrix(std::move(out));
}

ComplexSquareMatrix adjoint(const ComplexSquareMatrix& a) {
  ComplexSquareMatrix::Storage out = a.eigen().adjoint();
  return ComplexSquareMatrix(std::move(out));
}

Complex trace(const ComplexSquareMatrix& a) { return a.eigen().trace(); }

Complex trace_of_square(const ComplexSquareMatrix& a) {
  const std::size_t d = a.dim();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) sum += a(i, j) * a(j, i);
  }
  return sum;
}

ComplexSquareMatrix kron(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexSquareMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex s = a(i, j);
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = s * b(k, l);
      }
    }
  }
  return out;
}

void apply_gate_left(ComplexSquareMatrix& m, const ComplexSquareMatrix& gate,
                     std::span<const int> targets, int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("apply_gate_left: qubit count out of range");
  const std::size_t d = std::size_t{1} << n;
  if (m.dim() != d) throw std::invalid_argument("apply_gate_left: register dimension mismatch");
  const std::size_t k = targets.size();
  if (k == 0 || gate.dim() != (std::size_t{1} << k)) {
    throw std::invalid_argument("apply_gate_left: gate dimension does not match target count");
  }
  std::size_t target_mask = 0;
  for (int q : targets) {
    if (q < 1 || q > n) throw std::invalid_argument("apply_gate_left: target index out of range");
    const std::size_t bit = std::size_t{1} << bit_of(q, n);
    if (target_mask & bit) throw std::invalid_argument("apply_gate_left: duplicate target");
    target_mask |= bit;
  }

  // offsets[l] is the register index contribution of local basis state l.
  const std::size_t local = gate.dim();
  std::vector<std::size_t> offsets(local, 0);
  for (std::size_t l = 0; l < local; ++l) {
    for (std::size_t t = 0; t < k; ++t) {
      if (l & (std::size_t{1} << (k - 1 - t))) {
        offsets[l] |= std::size_t{1} << bit_of(targets[t], n);
      }
    }
  }

  auto& storage = m.eigen();
  std::vector<Complex> in(local);
  for (std::size_t base = 0; base < d; ++base) {
    if (base & target_mask) continue;
    for (std::size_t col = 0; col < d; ++col) {
      for (std::size_t l = 0; l < local; ++l) {
        in[l] = storage(static_cast<Index>(base | offsets[l]), static_cast<Index>(col));
      }
      for (std::size_t r = 0; r < local; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < local; ++c) acc += gate(r, c) * in[c];
        storage(static_cast<Index>(base | offsets[r]), static_cast<Index>(col)) = acc;
      }
    }
  }
}

ComplexSquareMatrix embed_gate(const ComplexSquareMatrix& gate,
                               std::span<const int> targets, int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("embed_gate: qubit count out of range");
  auto out = ComplexSquareMatrix::identity(std::size_t{1} << n);
  apply_gate_left(out, gate, targets, n);
  return out;
}

ComplexSquareMatrix exp_involutory(const ComplexSquareMatrix& g, double theta) {
  const auto& ge = g.eigen();
  const auto id = ComplexSquareMatrix::Storage::Identity(ge.rows(), ge.cols());
  if (!is_hermitian(g, kGeneratorTolerance) ||
      (ge * ge - id).cwiseAbs().maxCoeff() > kGeneratorTolerance) {
    throw std::invalid_argument("exp_involutory: generator must be Hermitian with g^2 = 1");
  }
  const Complex minus_i_sin(0.0, -std::sin(theta));
  ComplexSquareMatrix::Storage out = std::cos(theta) * id + minus_i_sin * ge;
  return ComplexSquareMatrix(std::move(out));
}

ComplexSquareMatrix exp_projector_squared(const ComplexSquareMatrix& a, double theta) {
  const auto& ae = a.eigen();
  const ComplexSquareMatrix::Storage a2 = ae * ae;
  if (!is_hermitian(a, kGeneratorTolerance) ||
      (a2 * a2 - a2).cwiseAbs().maxCoeff() > kGeneratorTolerance) {
    throw std::invalid_argument(
        "exp_projector_squared: generator must be Hermitian with a projector square");
  }
  const auto id = ComplexSquareMatrix::Storage::Identity(ae.rows(), ae.cols());
  const Complex minus_i_sin(0.0, -std::sin(theta));
  ComplexSquareMatrix::Storage out = id + (std::cos(theta) - 1.0) * a2 + minus_i_sin * ae;
  return ComplexSquareMatrix(std::move(out));
}

double unitarity_residual(const ComplexSquareMatrix& u) {
  const auto& ue = u.eigen();
  ComplexSquareMatrix::Storage gram = ue.adjoint() * ue;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

UnitaryOperator::UnitaryOperator(ComplexSquareMatrix matrix)
    : matrix_(std::move(matrix)), residual_(fdcert::unitarity_residual(matrix_)) {
  if (!(residual_ <= kResidualTolerance)) {
    std::ostringstream msg;
    msg << "UnitaryOperator: unitarity residual " << residual_ << " exceeds "
        << kResidualTolerance;
    throw std::invalid_argument(msg.str());
  }
  if (dim() <= kDeterminantCheckMaxDim) {
    const double det_abs = std::abs(matrix_.eigen().determinant());
    if (std::abs(det_abs - 1.0) > kDeterminantTolerance) {
      throw std::invalid_argument("UnitaryOperator: |det| differs from 1");
    }
  }
}

std::vector<Complex> eigenvalues_unitary(const UnitaryOperator& u) {
  using Dense = Eigen::MatrixXcd;
  const Dense x = u.matrix().eigen();
  const Index d = x.rows();
  const Dense herm = (x + x.adjoint()) * 0.5;
  const Dense anti = (x - x.adjoint()) * Complex(0.0, -0.5);

  Eigen::SelfAdjointEigenSolver<Dense> outer(herm);
  if (outer.info() != Eigen::Success) {
    throw NumericalError("eigenvalues_unitary: Hermitian eigensolver did not converge",
                         std::numeric_limits<double>::infinity());
  }
  const Eigen::VectorXd& cosines = outer.eigenvalues();
  const Dense& basis = outer.eigenvectors();

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(d));
  Index start = 0;
  while (start < d) {
    Index stop = start + 1;
    while (stop < d && cosines(stop) - cosines(stop - 1) < kDegeneracyGap) ++stop;
    const Index width = stop - start;
    if (width == 1) {
      const auto v = basis.col(start);
      out.push_back(v.dot(x * v));
    } else {
      // Split the degenerate block by the anti-Hermitian part, which commutes
      // with the Hermitian part for a normal matrix.
      const Dense block = basis.middleCols(start, width);
      const Dense restricted = block.adjoint() * anti * block;
      Eigen::SelfAdjointEigenSolver<Dense> inner(restricted);
      if (inner.info() != Eigen::Success) {
        throw NumericalError("eigenvalues_unitary: degenerate-block eigensolver did not converge",
                             std::numeric_limits<double>::infinity());
      }
      const Dense rotated = block * inner.eigenvectors();
      for (Index j = 0; j < width; ++j) {
        const auto v = rotated.col(j);
        out.push_back(v.dot(x * v));
      }
    }
    start = stop;
  }

  double worst_modulus = 0.0;
  Complex sum = 0.0;
  for (const Complex& z : out) {
    worst_modulus = std::max(worst_modulus, std::abs(std::abs(z) - 1.0));
    sum += z;
  }
  const double trace_gap = std::abs(sum - x.trace());
  if (worst_modulus > kUnitCircleTolerance) {
    throw NumericalError("eigenvalues_unitary: eigenvalue off the unit circle", worst_modulus);
  }
  if (trace_gap > kUnitCircleTolerance * static_cast<double>(d)) {
    throw NumericalError("eigenvalues_unitary: eigenvalues do not sum to the trace", trace_gap);
  }
  return out;
}

namespace paulis {

ComplexSquareMatrix identity2() { return ComplexSquareMatrix::identity(2); }
ComplexSquareMatrix x() { return ComplexSquareMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexSquareMatrix y() {
  return ComplexSquareMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}
ComplexSquareMatrix z() { return ComplexSquareMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }
ComplexSquareMatrix projector1() {
  return ComplexSquareMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
}

}  // namespace paulis

}  // namespace fdcert
