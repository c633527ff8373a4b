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

#ifndef FDCERT_LINALG_HPP_
#define FDCERT_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace fdcert {

using Complex = std::complex<double>;

/// Raised when an iterative numerical kernel fails its post-condition checks.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Dense d x d complex matrix with row-major storage.
///
/// Construction validates that every entry is finite. The underlying Eigen
/// matrix is exposed read-only through `eigen()` for kernels that need it.
class ComplexSquareMatrix {
 public:
  using Storage =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// Zero matrix of the given dimension (dim >= 1).
  explicit ComplexSquareMatrix(std::size_t dim);
  /// Row-major entries; throws unless entries.size() == dim * dim.
  ComplexSquareMatrix(std::size_t dim, std::span<const Complex> entries);
  explicit ComplexSquareMatrix(Storage storage);

  static ComplexSquareMatrix identity(std::size_t dim);
  static ComplexSquareMatrix diagonal(std::span<const Complex> diag);
  static ComplexSquareMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  std::span<const Complex> entries() const noexcept {
    return {m_.data(), static_cast<std::size_t>(m_.size())};
  }
  const Storage& eigen() const noexcept { return m_; }
  Storage& eigen() noexcept { return m_; }

  bool all_finite() const;

 private:
  Storage m_;
};

/// Largest entry magnitude of a - b. Dimensions must agree.
double max_abs_diff(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b);

ComplexSquareMatrix multiply(const ComplexSquareMatrix& a,
                             const ComplexSquareMatrix& b);
ComplexSquareMatrix adjoint(const ComplexSquareMatrix& a);
Complex trace(const ComplexSquareMatrix& a);
/// tr(A^2) as sum_ij A_ij A_ji, without forming the product.
Complex trace_of_square(const ComplexSquareMatrix& a);
/// Tensor product; the left factor indexes the more significant digit.
ComplexSquareMatrix kron(const ComplexSquareMatrix& a,
                         const ComplexSquareMatrix& b);

/// Lifts `gate` onto an n-qubit register acting on `targets` (1-based, in
/// listed order; the first target is the gate's most significant local bit).
/// Qubit 1 is the most significant bit of the computational-basis index.
ComplexSquareMatrix embed_gate(const ComplexSquareMatrix& gate,
                               std::span<const int> targets, int n);

/// In place `m = embed_gate(gate, targets, n) * m`, in O(2^k d^2).
void apply_gate_left(ComplexSquareMatrix& m, const ComplexSquareMatrix& gate,
                     std::span<const int> targets, int n);

/// exp(-i theta g) = cos(theta) 1 - i sin(theta) g for Hermitian g with g^2 = 1.
ComplexSquareMatrix exp_involutory(const ComplexSquareMatrix& g, double theta);

/// exp(-i theta a) = 1 + (cos(theta) - 1) a^2 - i sin(theta) a for Hermitian a
/// whose square is a projector.
ComplexSquareMatrix exp_projector_squared(const ComplexSquareMatrix& a,
                                          double theta);

/// A square matrix that passed the unitarity check at construction.
class UnitaryOperator {
 public:
  static constexpr double kResidualTolerance = 1e-10;
  static constexpr double kDeterminantTolerance = 1e-8;
  static constexpr std::size_t kDeterminantCheckMaxDim = 16;

  /// Throws std::invalid_argument if max|U^dag U - 1| exceeds the tolerance or
  /// (for dim <= 16) if ||det U| - 1| does.
  explicit UnitaryOperator(ComplexSquareMatrix matrix);

  const ComplexSquareMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  double unitarity_residual() const noexcept { return residual_; }

 private:
  ComplexSquareMatrix matrix_;
  double residual_;
};

/// max |U^dag U - 1| over entries.
double unitarity_residual(const ComplexSquareMatrix& u);

/// All d eigenvalues of a unitary, via the commuting Hermitian and
/// anti-Hermitian parts. Throws NumericalError if the results are not on the
/// unit circle or do not sum to the trace.
std::vector<Complex> eigenvalues_unitary(const UnitaryOperator& u);

namespace paulis {
ComplexSquareMatrix identity2();
ComplexSquareMatrix x();
ComplexSquareMatrix y();
ComplexSquareMatrix z();
/// |1><1|
ComplexSquareMatrix projector1();
}  // namespace paulis

}  // namespace fdcert

#endif  // FDCERT_LINALG_HPP_
