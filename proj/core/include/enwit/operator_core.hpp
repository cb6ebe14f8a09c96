// Copyright 2026 The enwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENWIT_OPERATOR_CORE_HPP_
#define ENWIT_OPERATOR_CORE_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace enwit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Desk-scale guard on the total Hilbert-space dimension.
inline constexpr std::size_t kMaxDimension = 4096;

// Absolute Hermiticity tolerance, scaled by max(1, max|entry|).
inline constexpr double kHermitianTolerance = 1e-12;

/// Local dimensions of a tensor-product Hilbert space, site 0 being the most
/// significant factor of the computational basis index.
class SystemShape {
 public:
  explicit SystemShape(std::vector<std::size_t> local_dims);

  static SystemShape qubits(std::size_t n_sites);

  const std::vector<std::size_t>& local_dims() const { return dims_; }
  std::size_t num_sites() const { return dims_.size(); }
  std::size_t local_dim(std::size_t site) const { return dims_.at(site); }
  std::size_t dimension() const { return dimension_; }
  bool all_qubits() const;

  // Row-major mixed-radix digits of a basis index.
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> digits) const;

  friend bool operator==(const SystemShape&, const SystemShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t dimension_ = 1;
};

SystemShape concat(const SystemShape& a, const SystemShape& b);

/// Dense complex Hermitian matrix attached to a SystemShape. Construction
/// symmetrizes (M + M^dagger)/2 when the asymmetry is within tolerance and
/// throws InvalidArgument otherwise.
class HermitianOperator {
 public:
  HermitianOperator(SystemShape shape, Matrix entries);

  static HermitianOperator identity(const SystemShape& shape);
  static HermitianOperator zero(const SystemShape& shape);

  const SystemShape& shape() const { return shape_; }
  const Matrix& matrix() const { return entries_; }
  std::size_t dimension() const { return shape_.dimension(); }
  double trace() const { return entries_.trace().real(); }

 private:
  SystemShape shape_;
  Matrix entries_;
};

HermitianOperator operator+(const HermitianOperator& a,
                            const HermitianOperator& b);
HermitianOperator operator-(const HermitianOperator& a,
                            const HermitianOperator& b);
HermitianOperator operator-(const HermitianOperator& a);
HermitianOperator operator*(double c, const HermitianOperator& a);
HermitianOperator operator*(const HermitianOperator& a, double c);

// Unit-trace positive semidefinite operator.
class DensityMatrix {
 public:
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kPositivityTolerance = 1e-10;

  explicit DensityMatrix(HermitianOperator op);

  // |psi><psi| / <psi|psi>.
  static DensityMatrix from_pure(const SystemShape& shape, const Vector& psi);
  static DensityMatrix maximally_mixed(const SystemShape& shape);
  // Divides a positive semidefinite operator by its trace.
  static DensityMatrix normalized(const HermitianOperator& op);

  const HermitianOperator& op() const { return op_; }
  const SystemShape& shape() const { return op_.shape(); }
  const Matrix& matrix() const { return op_.matrix(); }
  std::size_t dimension() const { return op_.dimension(); }

 private:
  HermitianOperator op_;
};

/// Ascending eigenvalues with orthonormal eigenvector columns.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }
};

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

// Throws NumericalError if the solver does not converge.
SpectralDecomposition eig(const HermitianOperator& m);
Eigen::VectorXd eigenvalues(const HermitianOperator& m);
double min_eigenvalue(const HermitianOperator& m);
double max_eigenvalue(const HermitianOperator& m);

// Tr(m rho); throws on shape mismatch or an imaginary residue above 1e-10.
double expectation(const HermitianOperator& m, const DensityMatrix& rho);
double expectation(const HermitianOperator& m, const Vector& psi);

// Transposes the listed sites. Throws InvalidArgument on an out-of-range or
// repeated site index.
HermitianOperator partial_transpose(const HermitianOperator& m,
                                    std::span<const std::size_t> sites);
HermitianOperator partial_transpose(const DensityMatrix& rho,
                                    std::span<const std::size_t> sites);

// Single-qubit Pauli matrix for letter I, X, Y or Z (case-insensitive).
HermitianOperator pauli(char letter);

}  // namespace enwit

#endif  // ENWIT_OPERATOR_CORE_HPP_
