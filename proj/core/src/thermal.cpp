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

#include "enwit/thermal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "enwit/errors.hpp"
#include "enwit/hamiltonian.hpp"

namespace enwit {

namespace {

void require_positive(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("thermal: temperature must be finite and > 0, got " +
                          std::to_string(temperature));
  }
}

// Boltzmann weights exp(-beta (E_i - E_0)), all in (0, 1].
Eigen::VectorXd shifted_weights(const Eigen::VectorXd& energies, double beta) {
  return (-beta * (energies.array() - energies(0))).exp().matrix();
}

}  // namespace

ThermalPoint thermal_point(const SpectralDecomposition& spec,
                           double temperature) {
  require_positive(temperature);
  const double beta = 1.0 / temperature;
  const Eigen::VectorXd& e = spec.eigenvalues;
  const Eigen::VectorXd w = shifted_weights(e, beta);
  const double z_shifted = w.sum();
  ThermalPoint p;
  p.temperature = temperature;
  p.beta = beta;
  p.log_partition_z = std::log(z_shifted) - beta * e(0);
  p.partition_z = std::exp(p.log_partition_z);
  p.mean_energy = w.dot(e) / z_shifted;
  return p;
}

std::pair<DensityMatrix, ThermalPoint> gibbs(const SpectralDecomposition& spec,
                                             const SystemShape& shape,
                                             double temperature) {
  ThermalPoint p = thermal_point(spec, temperature);
  const Eigen::VectorXd w = shifted_weights(spec.eigenvalues, p.beta);
  const Eigen::VectorXcd probs = (w / w.sum()).cast<Complex>();
  const Matrix rho =
      spec.eigenvectors * probs.asDiagonal() * spec.eigenvectors.adjoint();
  return {DensityMatrix(HermitianOperator(shape, rho)), p};
}

std::pair<DensityMatrix, ThermalPoint> gibbs(const HermitianOperator& h,
                                             double temperature) {
  require_positive(temperature);
  return gibbs(eig(h), h.shape(), temperature);
}

DensityMatrix ground_state(const HermitianOperator& h) {
  const SpectralDecomposition spec = eig(h);
  Eigen::Index degeneracy = 1;
  while (degeneracy < spec.eigenvalues.size() &&
         spec.eigenvalues(degeneracy) - spec.eigenvalues(0) <=
             kDegeneracyTolerance) {
    ++degeneracy;
  }
  const Matrix v = spec.eigenvectors.leftCols(degeneracy);
  return DensityMatrix(HermitianOperator(
      h.shape(), (v * v.adjoint()) / static_cast<double>(degeneracy)));
}

std::vector<ThermalPoint> energy_curve(const HermitianOperator& h,
                                       std::span<const double> temperatures) {
  for (std::size_t k = 0; k < temperatures.size(); ++k) {
    require_positive(temperatures[k]);
    if (k > 0 && !(temperatures[k] > temperatures[k - 1])) {
      throw InvalidArgument("energy_curve: temperatures must be ascending");
    }
  }
  const SpectralDecomposition spec = eig(h);
  std::vector<ThermalPoint> out;
  out.reserve(temperatures.size());
  for (double t : temperatures) out.push_back(thermal_point(spec, t));
  return out;
}

}  // namespace enwit
