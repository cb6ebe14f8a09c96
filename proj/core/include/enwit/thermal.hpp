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

#ifndef ENWIT_THERMAL_HPP_
#define ENWIT_THERMAL_HPP_

#include <span>
#include <utility>
#include <vector>

#include "enwit/operator_core.hpp"

namespace enwit {

// Temperatures are in units of J/k_B with k_B = 1.
struct ThermalPoint {
  double temperature = 0.0;
  double beta = 0.0;
  double partition_z = 0.0;  // may overflow to +inf at very small T
  double log_partition_z = 0.0;
  double mean_energy = 0.0;
};

// rho(T) = exp(-H/T) / Z, evaluated in the eigenbasis with the exponent
// shifted by the ground energy. Throws InvalidArgument for T <= 0.
std::pair<DensityMatrix, ThermalPoint> gibbs(const HermitianOperator& h,
                                             double temperature);
std::pair<DensityMatrix, ThermalPoint> gibbs(const SpectralDecomposition& spec,
                                             const SystemShape& shape,
                                             double temperature);

// Thermodynamic quantities only, without forming rho.
ThermalPoint thermal_point(const SpectralDecomposition& spec,
                           double temperature);

// T = 0 state: the maximally mixed state on the ground eigenspace
// (levels within kDegeneracyTolerance of the minimum).
DensityMatrix ground_state(const HermitianOperator& h);

// One ThermalPoint per temperature; throws InvalidArgument unless the
// temperatures are positive and ascending.
std::vector<ThermalPoint> energy_curve(const HermitianOperator& h,
                                       std::span<const double> temperatures);

}  // namespace enwit

#endif  // ENWIT_THERMAL_HPP_
