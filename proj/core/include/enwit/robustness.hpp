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

#ifndef ENWIT_ROBUSTNESS_HPP_
#define ENWIT_ROBUSTNESS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "enwit/operator_core.hpp"

namespace enwit {

/// Primal-dual certificate for the generalized robustness of a two-qubit
/// state.
///
/// Primal: minimize Tr X over X >= 0 with (rho + X)^T_B >= 0. Then
/// s = Tr X and pi = X / s is the mixing state making (rho + s pi)/(1 + s)
/// separable (PPT = separable for two qubits).
///
/// Dual: maximize -Tr(W rho) over W <= I with W^T_B >= 0.
///
/// Every returned certificate is strictly feasible on both sides, so
/// dual_value <= R_g <= primal_value holds rigorously up to rounding.
struct RobustnessCertificate {
  double rg_value = 0.0;  // midpoint of primal and dual values
  double primal_value = 0.0;
  double dual_value = 0.0;
  HermitianOperator primal_mixing;  // X = s pi
  HermitianOperator dual_witness;   // W
  double duality_gap = 0.0;
  std::size_t newton_steps = 0;

  // (primal, dual) after each barrier stage.
  struct Stage {
    double barrier_weight = 0.0;  // mu
    double primal = 0.0;
    double dual = 0.0;
  };
  std::vector<Stage> stages;
};

struct RobustnessOptions {
  double initial_barrier = 1.0;
  double final_barrier = 1e-9;
  double barrier_factor = 10.0;
  double max_gap = 1e-5;  // hard error above this
  std::size_t max_newton_steps_per_stage = 200;
};

// Throws InvalidArgument unless shape is [2, 2]; NumericalError when the
// final duality gap exceeds options.max_gap.
RobustnessCertificate rg_exact_2q(const DensityMatrix& rho,
                                  const RobustnessOptions& options = {});

// (sum_i lambda_i)^2 - 1 for Schmidt coefficients lambda (any order).
// Throws InvalidArgument unless they are nonnegative with squares summing
// to 1 within 1e-10.
double rg_pure(std::span<const double> schmidt);

// Schmidt coefficients (descending) of a pure state on a dim_a x dim_b cut.
std::vector<double> schmidt_coefficients(const Vector& psi, std::size_t dim_a,
                                         std::size_t dim_b);

struct EntanglementTest {
  bool entangled = false;
  double margin = 0.0;  // smallest eigenvalue of the partial transpose
};

// PPT test; entangled iff margin < -1e-10. Requires shape [2, 2].
EntanglementTest is_entangled_2q(const DensityMatrix& rho);

}  // namespace enwit

#endif  // ENWIT_ROBUSTNESS_HPP_
