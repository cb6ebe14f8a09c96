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

#include "enwit/robustness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "enwit/errors.hpp"

namespace enwit {

namespace {

constexpr Eigen::Index kDim = 4;
constexpr Eigen::Index kVars = kDim * kDim;
constexpr std::array<std::size_t, 1> kSecondQubit = {1};

using Mat4 = Eigen::Matrix4cd;
using Hessian = Eigen::Matrix<double, kVars, kVars>;
using Coords = Eigen::Matrix<double, kVars, 1>;

const SystemShape& two_qubits() {
  static const SystemShape shape = SystemShape::qubits(2);
  return shape;
}

void require_two_qubits(const DensityMatrix& rho, const char* who) {
  if (!(rho.shape() == two_qubits())) {
    throw InvalidArgument(std::string(who) +
                          ": only two-qubit states (shape [2, 2]) are "
                          "supported");
  }
}

// Partial transpose on the second qubit for raw iterates, which are only
// Hermitian up to the rounding of inverses.
Mat4 pt(const Mat4& m) {
  Mat4 out;
  for (Eigen::Index a = 0; a < 2; ++a)
    for (Eigen::Index b = 0; b < 2; ++b)
      for (Eigen::Index c = 0; c < 2; ++c)
        for (Eigen::Index d = 0; d < 2; ++d)
          out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return out;
}

Mat4 hermitian_part(const Mat4& m) { return 0.5 * (m + m.adjoint()); }

// Orthonormal (Hilbert-Schmidt) basis of 4x4 Hermitian matrices.
struct HermitianBasis {
  std::array<Mat4, kVars> elements;
  std::array<Mat4, kVars> transposed;  // partial transposes
  Coords traces;

  HermitianBasis() {
    const double r = 1.0 / std::sqrt(2.0);
    std::size_t k = 0;
    for (Eigen::Index a = 0; a < kDim; ++a) {
      Mat4 e = Mat4::Zero();
      e(a, a) = 1.0;
      elements[k++] = e;
    }
    for (Eigen::Index a = 0; a < kDim; ++a) {
      for (Eigen::Index b = a + 1; b < kDim; ++b) {
        Mat4 re = Mat4::Zero();
        re(a, b) = r;
        re(b, a) = r;
        elements[k++] = re;
        Mat4 im = Mat4::Zero();
        im(a, b) = Complex(0.0, r);
        im(b, a) = Complex(0.0, -r);
        elements[k++] = im;
      }
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      transposed[i] = pt(elements[i]);
      traces(static_cast<Eigen::Index>(i)) = elements[i].trace().real();
    }
  }

  Mat4 combine(const Coords& x) const {
    Mat4 m = Mat4::Zero();
    for (Eigen::Index i = 0; i < kVars; ++i) {
      m += x(i) * elements[static_cast<std::size_t>(i)];
    }
    return m;
  }
};

const HermitianBasis& basis() {
  static const HermitianBasis b;
  return b;
}

// Real part of Tr(a b).
double trace_product(const Mat4& a, const Mat4& b) {
  return (a.array() * b.transpose().array()).sum().real();
}

// log det of a Hermitian matrix; false when it is not positive definite.
bool log_det_pd(const Mat4& m, double& out) {
  Eigen::LLT<Mat4> llt(m);
  if (llt.info() != Eigen::Success) return false;
  const Eigen::Vector4d d = llt.matrixLLT().diagonal().real();
  if ((d.array() <= 0.0).any()) return false;
  out = 2.0 * d.array().log().sum();
  return true;
}

struct Barrier {
  const Mat4& rho_pt;
  double weight;  // t = 1 / mu

  // t Tr X - log det X - log det (rho + X)^T_B; false outside the domain.
  bool value(const Mat4& x, double& out) const {
    double ld_x = 0.0;
    double ld_a = 0.0;
    if (!log_det_pd(x, ld_x)) return false;
    if (!log_det_pd(rho_pt + pt(x), ld_a)) return false;
    out = weight * x.trace().real() - ld_x - ld_a;
    return true;
  }
};

struct DualCandidate {
  Mat4 witness;
  double value;
};

// Y = mu A^{-1} >= 0 and W = Y^T_B, rescaled so that W <= I. W = 0 is
// always feasible with value 0.
DualCandidate dual_from_primal(const Mat4& rho, const Mat4& a_inv, double mu) {
  Mat4 w = hermitian_part(pt(mu * a_inv));
  const double top =
      Eigen::SelfAdjointEigenSolver<Mat4>(w, Eigen::EigenvaluesOnly)
          .eigenvalues()(kDim - 1);
  if (top > 1.0) w /= top;
  const double value = -trace_product(w, rho);
  if (!(value > 0.0)) return {Mat4::Zero(), 0.0};
  return {w, value};
}

}  // namespace

RobustnessCertificate rg_exact_2q(const DensityMatrix& rho,
                                  const RobustnessOptions& options) {
  require_two_qubits(rho, "rg_exact_2q");
  const HermitianBasis& hb = basis();
  const Mat4 r = rho.matrix();
  const Mat4 r_pt = pt(r);

  const double pt_min =
      Eigen::SelfAdjointEigenSolver<Mat4>(r_pt, Eigen::EigenvaluesOnly)
          .eigenvalues()(0);
  Mat4 x = (1.0 + std::max(0.0, -pt_min)) * Mat4::Identity();

  std::vector<RobustnessCertificate::Stage> stages;
  DualCandidate best_dual{Mat4::Zero(), 0.0};
  std::size_t newton_steps = 0;

  for (double mu = options.initial_barrier;
       mu >= options.final_barrier * (1.0 - 1e-12);
       mu /= options.barrier_factor) {
    const Barrier barrier{r_pt, 1.0 / mu};
    for (std::size_t step = 0; step < options.max_newton_steps_per_stage;
         ++step) {
      const Mat4 x_inv = hermitian_part(x.inverse());
      const Mat4 a_inv = hermitian_part((r_pt + pt(x)).inverse());

      // Gradient and Hessian in the orthonormal Hermitian basis.
      std::array<Mat4, kVars> xe, ae;
      Coords grad;
      for (Eigen::Index i = 0; i < kVars; ++i) {
        const auto k = static_cast<std::size_t>(i);
        xe[k] = x_inv * hb.elements[k];
        ae[k] = a_inv * hb.transposed[k];
        grad(i) = barrier.weight * hb.traces(i) - xe[k].trace().real() -
                  ae[k].trace().real();
      }
      Hessian hess;
      for (Eigen::Index i = 0; i < kVars; ++i) {
        for (Eigen::Index j = i; j < kVars; ++j) {
          const auto ki = static_cast<std::size_t>(i);
          const auto kj = static_cast<std::size_t>(j);
          hess(i, j) = trace_product(xe[ki], xe[kj]) +
                       trace_product(ae[ki], ae[kj]);
          hess(j, i) = hess(i, j);
        }
      }
      const Coords dx = hess.ldlt().solve(-grad);
      const double decrement = -grad.dot(dx);
      if (!std::isfinite(decrement) || decrement < 0.0) break;
      if (decrement / 2.0 < 1e-9) break;

      // Backtracking with domain check and Armijo condition.
      const Mat4 dir = hb.combine(dx);
      double f0 = 0.0;
      barrier.value(x, f0);
      double alpha = 1.0;
      bool moved = false;
      double f1 = f0;
      for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
        const Mat4 trial = x + alpha * dir;
        if (barrier.value(trial, f1) && f1 <= f0 - 0.25 * alpha * decrement) {
          x = hermitian_part(trial);
          moved = true;
          break;
        }
      }
      ++newton_steps;
      if (!moved) break;
      // Progress at the rounding level of the barrier value: the centering
      // problem is solved as well as double precision allows.
      if (f0 - f1 <= 1e-13 * std::max(1.0, std::abs(f0))) break;
    }

    const Mat4 a_inv = hermitian_part((r_pt + pt(x)).inverse());
    const DualCandidate dual = dual_from_primal(r, a_inv, mu);
    if (dual.value > best_dual.value) best_dual = dual;
    stages.push_back({mu, x.trace().real(), dual.value});
  }

  const double primal = x.trace().real();
  const double dual = best_dual.value;
  const double gap = primal - dual;
  if (!(gap <= options.max_gap)) {
    throw NumericalError("rg_exact_2q: duality gap " + std::to_string(gap) +
                         " above tolerance");
  }
  return RobustnessCertificate{
      0.5 * (primal + dual),
      primal,
      dual,
      HermitianOperator(two_qubits(), x),
      HermitianOperator(two_qubits(), best_dual.witness),
      gap,
      newton_steps,
      std::move(stages),
  };
}

double rg_pure(std::span<const double> schmidt) {
  if (schmidt.empty()) throw InvalidArgument("rg_pure: no coefficients");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double l : schmidt) {
    if (!(l >= 0.0)) throw InvalidArgument("rg_pure: negative coefficient");
    sum += l;
    sum_sq += l * l;
  }
  if (std::abs(sum_sq - 1.0) > 1e-10) {
    throw InvalidArgument("rg_pure: squared coefficients sum to " +
                          std::to_string(sum_sq));
  }
  return sum * sum - 1.0;
}

std::vector<double> schmidt_coefficients(const Vector& psi, std::size_t dim_a,
                                         std::size_t dim_b) {
  if (psi.size() != static_cast<Eigen::Index>(dim_a * dim_b)) {
    throw InvalidArgument("schmidt_coefficients: dimension mismatch");
  }
  Matrix m(static_cast<Eigen::Index>(dim_a), static_cast<Eigen::Index>(dim_b));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = psi(i * m.cols() + j);
  m /= psi.norm();
  const Eigen::VectorXd s = Eigen::JacobiSVD<Matrix>(m).singularValues();
  return {s.data(), s.data() + s.size()};
}

EntanglementTest is_entangled_2q(const DensityMatrix& rho) {
  require_two_qubits(rho, "is_entangled_2q");
  const double margin = min_eigenvalue(partial_transpose(rho, kSecondQubit));
  return {margin < -1e-10, margin};
}

}  // namespace enwit
