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

#include "enwit/operator_core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "enwit/errors.hpp"

namespace enwit {

SystemShape::SystemShape(std::vector<std::size_t> local_dims)
    : dims_(std::move(local_dims)) {
  if (dims_.empty()) throw InvalidArgument("SystemShape: no subsystems");
  for (std::size_t d : dims_) {
    if (d < 2) {
      throw InvalidArgument("SystemShape: local dimension " +
                            std::to_string(d) + " < 2");
    }
    if (dimension_ * d > kMaxDimension) {
      throw InvalidArgument("SystemShape: total dimension exceeds " +
                            std::to_string(kMaxDimension));
    }
    dimension_ *= d;
  }
}

SystemShape SystemShape::qubits(std::size_t n_sites) {
  return SystemShape(std::vector<std::size_t>(n_sites, 2));
}

bool SystemShape::all_qubits() const {
  return std::all_of(dims_.begin(), dims_.end(),
                     [](std::size_t d) { return d == 2; });
}

std::vector<std::size_t> SystemShape::digits(std::size_t index) const {
  std::vector<std::size_t> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = index % dims_[k];
    index /= dims_[k];
  }
  return out;
}

std::size_t SystemShape::index(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) idx = idx * dims_[k] + digits[k];
  return idx;
}

SystemShape concat(const SystemShape& a, const SystemShape& b) {
  std::vector<std::size_t> dims = a.local_dims();
  dims.insert(dims.end(), b.local_dims().begin(), b.local_dims().end());
  return SystemShape(std::move(dims));
}

HermitianOperator::HermitianOperator(SystemShape shape, Matrix entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(shape_.dimension());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw InvalidArgument("HermitianOperator: matrix is " +
                          std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()) +
                          ", shape requires " + std::to_string(n));
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kHermitianTolerance * scale)) {
    throw InvalidArgument("HermitianOperator: asymmetry " +
                          std::to_string(asym) + " exceeds tolerance");
  }
  entries_ = (0.5 * (entries_ + entries_.adjoint())).eval();
}

HermitianOperator HermitianOperator::identity(const SystemShape& shape) {
  const auto n = static_cast<Eigen::Index>(shape.dimension());
  return HermitianOperator(shape, Matrix::Identity(n, n));
}

HermitianOperator HermitianOperator::zero(const SystemShape& shape) {
  const auto n = static_cast<Eigen::Index>(shape.dimension());
  return HermitianOperator(shape, Matrix::Zero(n, n));
}

namespace {

void require_same_shape(const SystemShape& a, const SystemShape& b,
                        const char* what) {
  if (!(a == b)) throw InvalidArgument(std::string(what) + ": shape mismatch");
}

}  // namespace

HermitianOperator operator+(const HermitianOperator& a,
                            const HermitianOperator& b) {
  require_same_shape(a.shape(), b.shape(), "operator+");
  return HermitianOperator(a.shape(), a.matrix() + b.matrix());
}

HermitianOperator operator-(const HermitianOperator& a,
                            const HermitianOperator& b) {
  require_same_shape(a.shape(), b.shape(), "operator-");
  return HermitianOperator(a.shape(), a.matrix() - b.matrix());
}

HermitianOperator operator-(const HermitianOperator& a) {
  return HermitianOperator(a.shape(), -a.matrix());
}

HermitianOperator operator*(double c, const HermitianOperator& a) {
  return HermitianOperator(a.shape(), c * a.matrix());
}

HermitianOperator operator*(const HermitianOperator& a, double c) {
  return c * a;
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw InvalidArgument("DensityMatrix: trace " + std::to_string(tr) +
                          " != 1");
  }
  const double lo = min_eigenvalue(op_);
  if (lo < -kPositivityTolerance) {
    throw InvalidArgument("DensityMatrix: negative eigenvalue " +
                          std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::from_pure(const SystemShape& shape,
                                       const Vector& psi) {
  if (psi.size() != static_cast<Eigen::Index>(shape.dimension())) {
    throw InvalidArgument("DensityMatrix::from_pure: vector length mismatch");
  }
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw InvalidArgument("DensityMatrix::from_pure: zero vector");
  return DensityMatrix(
      HermitianOperator(shape, (psi * psi.adjoint()) / norm2));
}

DensityMatrix DensityMatrix::maximally_mixed(const SystemShape& shape) {
  return DensityMatrix(
      (1.0 / static_cast<double>(shape.dimension())) *
      HermitianOperator::identity(shape));
}

DensityMatrix DensityMatrix::normalized(const HermitianOperator& op) {
  const double tr = op.trace();
  if (!(tr > 0.0)) throw InvalidArgument("DensityMatrix::normalized: trace <= 0");
  return DensityMatrix((1.0 / tr) * op);
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

HermitianOperator tensor(const HermitianOperator& a,
                         const HermitianOperator& b) {
  const SystemShape shape = concat(a.shape(), b.shape());
  const Matrix& ma = a.matrix();
  const Matrix& mb = b.matrix();
  const Eigen::Index nb = mb.rows();
  Matrix out(ma.rows() * nb, ma.cols() * nb);
  for (Eigen::Index i = 0; i < ma.rows(); ++i) {
    for (Eigen::Index j = 0; j < ma.cols(); ++j) {
      out.block(i * nb, j * nb, nb, nb) = ma(i, j) * mb;
    }
  }
  return HermitianOperator(shape, std::move(out));
}

SpectralDecomposition eig(const HermitianOperator& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eig: Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd eigenvalues(const HermitianOperator& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalues: Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double min_eigenvalue(const HermitianOperator& m) {
  return eigenvalues(m)(0);
}

double max_eigenvalue(const HermitianOperator& m) {
  const Eigen::VectorXd ev = eigenvalues(m);
  return ev(ev.size() - 1);
}

double expectation(const HermitianOperator& m, const DensityMatrix& rho) {
  require_same_shape(m.shape(), rho.shape(), "expectation");
  // Tr(AB) = sum_ij A_ij B_ji
  const Complex tr =
      (m.matrix().array() * rho.matrix().transpose().array()).sum();
  if (std::abs(tr.imag()) > 1e-10) {
    throw NumericalError("expectation: imaginary residue " +
                         std::to_string(tr.imag()));
  }
  return tr.real();
}

double expectation(const HermitianOperator& m, const Vector& psi) {
  if (psi.size() != static_cast<Eigen::Index>(m.dimension())) {
    throw InvalidArgument("expectation: vector length mismatch");
  }
  const Complex v = psi.dot(m.matrix() * psi) / psi.squaredNorm();
  if (std::abs(v.imag()) > 1e-10) {
    throw NumericalError("expectation: imaginary residue " +
                         std::to_string(v.imag()));
  }
  return v.real();
}

HermitianOperator partial_transpose(const HermitianOperator& m,
                                    std::span<const std::size_t> sites) {
  const SystemShape& shape = m.shape();
  std::vector<bool> flip(shape.num_sites(), false);
  for (std::size_t s : sites) {
    if (s >= shape.num_sites()) {
      throw InvalidArgument("partial_transpose: site " + std::to_string(s) +
                            " out of range");
    }
    if (flip[s]) {
      throw InvalidArgument("partial_transpose: site " + std::to_string(s) +
                            " repeated");
    }
    flip[s] = true;
  }
  const std::size_t n = shape.dimension();
  std::vector<std::vector<std::size_t>> digits(n);
  for (std::size_t i = 0; i < n; ++i) digits[i] = shape.digits(i);

  const Matrix& in = m.matrix();
  Matrix out(in.rows(), in.cols());
  std::vector<std::size_t> row(shape.num_sites()), col(shape.num_sites());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < shape.num_sites(); ++k) {
        row[k] = flip[k] ? digits[j][k] : digits[i][k];
        col[k] = flip[k] ? digits[i][k] : digits[j][k];
      }
      out(static_cast<Eigen::Index>(shape.index(row)),
          static_cast<Eigen::Index>(shape.index(col))) =
          in(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return HermitianOperator(shape, std::move(out));
}

HermitianOperator partial_transpose(const DensityMatrix& rho,
                                    std::span<const std::size_t> sites) {
  return partial_transpose(rho.op(), sites);
}

HermitianOperator pauli(char letter) {
  const Complex i(0.0, 1.0);
  Matrix m(2, 2);
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default:
      throw InvalidArgument(std::string("pauli: unknown letter '") + letter +
                            "'");
  }
  return HermitianOperator(SystemShape::qubits(1), std::move(m));
}

}  // namespace enwit
