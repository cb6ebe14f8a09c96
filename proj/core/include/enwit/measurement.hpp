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

#ifndef ENWIT_MEASUREMENT_HPP_
#define ENWIT_MEASUREMENT_HPP_

#include <cstddef>
#include <cstdint>

#include "enwit/operator_core.hpp"
#include "enwit/witness.hpp"

namespace enwit {

struct EnergyEstimate {
  double mean = 0.0;
  double standard_error = 0.0;  // sample standard deviation / sqrt(shots)
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  bool single_shot = false;  // stderr is 0 by convention
};

// Projective measurement of h in its eigenbasis, repeated `shots` times on
// copies of rho. Degenerate levels are merged before sampling. Identical
// inputs give bit-identical estimates.
EnergyEstimate measure_energy(const HermitianOperator& h,
                              const DensityMatrix& rho, std::size_t shots,
                              std::uint64_t seed);

struct BoundInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool detected = false;  // whole interval above zero
};

// [(E_sep - mean - z se)/A, (E_sep - mean + z se)/A]; z must be >= 0
// (z = 0 gives the point estimate).
BoundInterval bound_with_confidence(const WitnessSpec& w,
                                    const EnergyEstimate& est, double z);

}  // namespace enwit

#endif  // ENWIT_MEASUREMENT_HPP_
