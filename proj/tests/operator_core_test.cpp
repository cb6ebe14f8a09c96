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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "enwit/errors.hpp"
#include "enwit/hamiltonian.hpp"
#include "enwit/random.hpp"
#include "test_util.hpp"

namespace enwit {
namespace {

using testing::naive_kron;

const SystemShape kTwoQubits = SystemShape::qubits(2);
constexpr std::array<std::size_t, 1> kSecond = {1};

HermitianOperator random_hermitian(Rng& rng, const SystemShape& shape) {
  const auto n = static_cast<Eigen::Index>(shape.dimension());
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  return HermitianOperator(shape, g + g.adjoint());
}

TEST(SystemShape, RejectsBadDimensions) {
  EXPECT_THROW(SystemShape({}), InvalidArgument);
  EXPECT_THROW(SystemShape({2, 1}), InvalidArgument);
  EXPECT_THROW(SystemShape::qubits(13), InvalidArgument);  // 8192 > 4096
  EXPECT_EQ(SystemShape::qubits(12).dimension(), 4096u);
  EXPECT_EQ(SystemShape({2, 3}).dimension(), 6u);
}

TEST(SystemShape, DigitsRoundTrip) {
  const SystemShape shape({2, 3, 2});
  for (std::size_t i = 0; i < shape.dimension(); ++i) {
    EXPECT_EQ(shape.index(shape.digits(i)), i);
  }
  EXPECT_EQ(shape.digits(7), (std::vector<std::size_t>{1, 0, 1}));
}

TEST(HermitianOperator, SymmetrizesSmallDriftAndRejectsLarge) {
  Matrix m = pauli('X').matrix();
  m(0, 1) += 1e-14;
  const HermitianOperator ok(SystemShape::qubits(1), m);
  EXPECT_EQ(ok.matrix(), ok.matrix().adjoint());

  m(0, 1) += 1e-6;
  EXPECT_THROW(HermitianOperator(SystemShape::qubits(1), m), InvalidArgument);
  EXPECT_THROW(HermitianOperator(kTwoQubits, Matrix::Identity(2, 2)),
               InvalidArgument);
}

TEST(Tensor, ZWithIdentityHasExpectedDiagonal) {
  const HermitianOperator zi = tensor(pauli('Z'), pauli('I'));
  Eigen::VectorXcd expected(4);
  expected << 1, 1, -1, -1;
  EXPECT_EQ(zi.matrix().diagonal(), expected);
  EXPECT_EQ(zi.shape(), kTwoQubits);
}

TEST(Tensor, IdentityWithIdentity) {
  EXPECT_EQ(tensor(pauli('I'), pauli('I')).matrix(), Matrix::Identity(4, 4));
}

TEST(Tensor, MatchesNaiveKroneckerProduct) {
  const Matrix xx = tensor(pauli('X'), pauli('X')).matrix();
  const Matrix yy = tensor(pauli('Y'), pauli('Y')).matrix();
  const Matrix ref = naive_kron(testing::pauli_x(), testing::pauli_x()) *
                     naive_kron(testing::pauli_y(), testing::pauli_y());
  EXPECT_LE(testing::max_abs_diff(xx * yy, ref), 1e-15);

  Rng rng(3);
  const HermitianOperator a = random_hermitian(rng, SystemShape({2, 3}));
  const HermitianOperator b = random_hermitian(rng, SystemShape({2}));
  const HermitianOperator ab = tensor(a, b);
  EXPECT_EQ(ab.shape(), SystemShape({2, 3, 2}));
  EXPECT_LE(testing::max_abs_diff(ab.matrix(), naive_kron(a.matrix(), b.matrix())),
            1e-15);
}

TEST(Tensor, DimensionGuard) {
  const HermitianOperator big = HermitianOperator::identity(SystemShape::qubits(11));
  EXPECT_THROW(tensor(big, HermitianOperator::identity(SystemShape({3}))),
               InvalidArgument);
}

TEST(Eig, DiagonalAndHeisenbergSpectra) {
  const SpectralDecomposition z = eig(pauli('Z'));
  EXPECT_NEAR(z.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(z.eigenvalues(1), 1.0, 1e-14);

  // Singlet at -3J, triplet at J + 2Bm.
  const HermitianOperator h0(kTwoQubits, testing::xxx_two_site_reference(1, 0));
  const Eigen::VectorXd e0 = eig(h0).eigenvalues;
  const std::array<double, 4> want0 = {-3, 1, 1, 1};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(e0(k), want0[k], 1e-12);

  const HermitianOperator h1(kTwoQubits,
                             testing::xxx_two_site_reference(1, 0.5));
  const Eigen::VectorXd e1 = eig(h1).eigenvalues;
  const std::array<double, 4> want1 = {-3, 0, 1, 2};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(e1(k), want1[k], 1e-12);
}

TEST(Eig, ReconstructionAndOrthonormalityOnRandomMatrices) {
  Rng rng(11);
  for (std::size_t n_sites = 1; n_sites <= 6; ++n_sites) {
    for (int trial = 0; trial < 5; ++trial) {
      const HermitianOperator m =
          random_hermitian(rng, SystemShape::qubits(n_sites));
      const SpectralDecomposition s = eig(m);
      for (Eigen::Index k = 1; k < s.eigenvalues.size(); ++k) {
        EXPECT_LE(s.eigenvalues(k - 1), s.eigenvalues(k));
      }
      EXPECT_LE(testing::max_abs_diff(s.reconstruct(), m.matrix()), 1e-9);
      const auto n = static_cast<Eigen::Index>(m.dimension());
      EXPECT_LE(testing::max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors,
                                      Matrix::Identity(n, n)),
                1e-9);
    }
  }
}

TEST(Expectation, IdentitySingletAndMaximallyMixed) {
  Rng rng(5);
  const HermitianOperator h(kTwoQubits, testing::xxx_two_site_reference(1, 0));
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix rho = random_density_matrix(rng, kTwoQubits, 4);
    EXPECT_NEAR(expectation(HermitianOperator::identity(kTwoQubits), rho), 1.0,
                1e-12);
  }
  const DensityMatrix singlet =
      DensityMatrix::from_pure(kTwoQubits, testing::singlet_vector());
  EXPECT_NEAR(expectation(h, singlet), -3.0, 1e-12);
  EXPECT_NEAR(expectation(h, DensityMatrix::maximally_mixed(kTwoQubits)), 0.0,
              1e-12);
  EXPECT_THROW(expectation(pauli('Z'), singlet), InvalidArgument);
}

TEST(Expectation, LiesWithinSpectralRange) {
  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    const HermitianOperator m = random_hermitian(rng, SystemShape::qubits(3));
    const DensityMatrix rho =
        random_density_matrix(rng, SystemShape::qubits(3), 1 + k % 8);
    const Eigen::VectorXd ev = eigenvalues(m);
    const double e = expectation(m, rho);
    EXPECT_GE(e, ev(0) - 1e-10);
    EXPECT_LE(e, ev(ev.size() - 1) + 1e-10);
  }
}

TEST(DensityMatrix, ValidatesTraceAndPositivity) {
  EXPECT_THROW(DensityMatrix(HermitianOperator::identity(kTwoQubits)),
               InvalidArgument);
  EXPECT_THROW(DensityMatrix(0.5 * (pauli('Z') + pauli('I')) + pauli('X')),
               InvalidArgument);
  EXPECT_NO_THROW(DensityMatrix::maximally_mixed(kTwoQubits));
}

TEST(PartialTranspose, ProductStateIsFixed) {
  Rng rng(23);
  const SystemShape one = SystemShape::qubits(1);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix a = random_density_matrix(rng, one, 2);
    const DensityMatrix b = random_density_matrix(rng, one, 1);
    // Real-symmetric second factor: its transpose equals itself.
    const HermitianOperator b_real(one, b.matrix().real().cast<Complex>());
    const HermitianOperator prod = tensor(a.op(), b_real);
    EXPECT_LE(testing::max_abs_diff(partial_transpose(prod, kSecond).matrix(),
                                    prod.matrix()),
              1e-15);
    // General product: partial transpose equals a (x) b^T.
    const HermitianOperator general = tensor(a.op(), b.op());
    const Matrix expected = naive_kron(a.matrix(), b.matrix().transpose());
    EXPECT_LE(testing::max_abs_diff(partial_transpose(general, kSecond).matrix(),
                                    expected),
              1e-15);
  }
}

TEST(PartialTranspose, SingletSpectrum) {
  const DensityMatrix singlet =
      DensityMatrix::from_pure(kTwoQubits, testing::singlet_vector());
  const Eigen::VectorXd ev = eigenvalues(partial_transpose(singlet, kSecond));
  EXPECT_NEAR(ev(0), -0.5, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev(k), 0.5, 1e-12);
}

TEST(PartialTranspose, InvolutionAndTracePreserving) {
  Rng rng(29);
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = random_density_matrix(rng, kTwoQubits, 4);
    const HermitianOperator once = partial_transpose(rho, kSecond);
    EXPECT_NEAR(once.trace(), 1.0, 1e-12);
    EXPECT_EQ(partial_transpose(once, kSecond).matrix(), rho.matrix());
  }
}

TEST(PartialTranspose, InvalidSites) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(kTwoQubits);
  const std::array<std::size_t, 1> bad = {2};
  const std::array<std::size_t, 2> repeated = {1, 1};
  EXPECT_THROW(partial_transpose(rho, bad), InvalidArgument);
  EXPECT_THROW(partial_transpose(rho, repeated), InvalidArgument);
}

TEST(Hermiticity, PreservedByCombinations) {
  Rng rng(31);
  const HermitianOperator a = random_hermitian(rng, kTwoQubits);
  const HermitianOperator b = random_hermitian(rng, kTwoQubits);
  const HermitianOperator c = 0.3 * a - 2.0 * b + a;
  EXPECT_EQ(c.matrix(), c.matrix().adjoint());
  EXPECT_THROW(a + pauli('Z'), InvalidArgument);
}

}  // namespace
}  // namespace enwit
