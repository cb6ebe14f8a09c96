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

#ifndef ENWIT_RANDOM_HPP_
#define ENWIT_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "enwit/operator_core.hpp"

namespace enwit {

// Derives an independent 64-bit seed for sub-stream `stream` of `seed`
// (splitmix64 finalizer), so that per-restart or per-cell streams depend only
// on (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Seeded generator with platform-independent draws. The standard library
// distributions are implementation-defined, so uniform and normal variates
// are built directly from the engine bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();
  // Real and imaginary parts independent N(0, 1/2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
};

// Uniform on the complex unit sphere of C^dim.
Vector random_unit_vector(Rng& rng, std::size_t dim);

// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Matrix random_unitary(Rng& rng, std::size_t dim);

// G G^dagger / Tr with G a dim x rank complex Ginibre matrix; rank = dim
// gives the Hilbert-Schmidt measure.
DensityMatrix random_density_matrix(Rng& rng, const SystemShape& shape,
                                    std::size_t rank);

}  // namespace enwit

#endif  // ENWIT_RANDOM_HPP_
