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

#ifndef ENWIT_SEP_ENERGY_HPP_
#define ENWIT_SEP_ENERGY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enwit/hamiltonian.hpp"
#include "enwit/operator_core.hpp"
#include "enwit/random.hpp"

namespace enwit {

/// Grouping of sites into blocks; separability is taken across blocks.
/// Blocks are nonempty, disjoint, cover every site, and number at least 2.
/// Sites inside a block are kept in ascending order.
class Partition {
 public:
  Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n_sites);

  // One block per site (full separability).
  static Partition singletons(std::size_t n_sites);
  // "0,1|2" style text.
  static Partition parse(std::string_view text, std::size_t n_sites);

  const std::vector<std::vector<std::size_t>>& blocks() const {
    return blocks_;
  }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t num_sites() const { return n_sites_; }
  std::size_t block_dimension(const SystemShape& shape, std::size_t b) const;

  std::string to_string() const;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t n_sites_ = 0;
};

// A pure product state across a partition: one unit vector per block, in
// the block's own basis (sites of the block in ascending order, first site
// most significant).
struct ProductStateAnsatz {
  Partition partition;
  std::vector<Vector> block_states;
};

Vector product_state_vector(const SystemShape& shape,
                            const ProductStateAnsatz& ansatz);

ProductStateAnsatz random_product_state(Rng& rng, const SystemShape& shape,
                                        const Partition& partition);

// Qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Vector qubit_from_bloch(double theta, double phi);
// Inverse of qubit_from_bloch up to global phase; phi in [0, 2 pi).
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};
BlochAngles bloch_angles(const Vector& qubit);

enum class EsepSource { kExactOptimized, kClosedForm, kUserSupplied };
std::string_view to_string(EsepSource source);

struct SepEnergyReport {
  double esep = 0.0;
  std::optional<ProductStateAnsatz> minimizer;  // absent for user values
  std::size_t restarts_used = 0;
  bool converged = true;
  EsepSource source = EsepSource::kExactOptimized;
};

struct SeesawOptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;  // absolute energy decrease per sweep
  std::size_t max_sweeps = 10000;
};

// Minimum of <psi|H|psi> over product states across `partition`, by
// alternating block ground-state updates from `restarts` random starts.
SepEnergyReport esep_seesaw(const HermitianOperator& h,
                            const Partition& partition,
                            const SeesawOptions& options = {});

// Brute-force scan over nested angle grids of every block state. Returns an
// upper bound to E_sep. Requires block dimensions <= 4 and resolution >= 8;
// refuses grids with more than kMaxGridEvaluations points.
inline constexpr double kMaxGridEvaluations = 2e9;
double esep_grid(const HermitianOperator& h, const Partition& partition,
                 std::size_t resolution);

// Two-site XXX only: -J - B^2/(2J) for |B| <= 2J, J - 2|B| beyond.
double esep_closed_form_xxx(const XXXParams& p);
// Same value with the attaining product state as minimizer.
SepEnergyReport esep_closed_form_report(const XXXParams& p);

// Externally supplied separability energy (no minimizer).
SepEnergyReport esep_reference(double value);

}  // namespace enwit

#endif  // ENWIT_SEP_ENERGY_HPP_
