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

#ifndef ENWIT_WITNESS_HPP_
#define ENWIT_WITNESS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enwit/hamiltonian.hpp"
#include "enwit/operator_core.hpp"
#include "enwit/sep_energy.hpp"

namespace enwit {

/// Energy witness W = (H - E_sep I) / A, with A = sup over states of
/// |<H> - E_sep| = max(E_max - E_sep, E_sep - E_0). This choice makes W <= I,
/// so -Tr(W rho) lower-bounds the generalized robustness of any rho.
struct WitnessSpec {
  HermitianOperator hamiltonian;
  double esep = 0.0;
  double e_min = 0.0;
  double e_max = 0.0;
  double normalizer = 0.0;  // A
  EsepSource esep_source = EsepSource::kExactOptimized;
  // User-supplied E_sep below the ground energy: the witness is valid but
  // detects nothing.
  bool esep_below_ground = false;

  HermitianOperator unnormalized() const;  // H - E_sep I
  HermitianOperator normalized() const;    // (H - E_sep I) / A
};

// Throws InvalidArgument when A <= 1e-12 (constant Hamiltonian).
WitnessSpec make_witness(const HermitianOperator& h,
                         const SepEnergyReport& esep);

struct BoundReport {
  double mean_energy = 0.0;
  double esep = 0.0;
  double normalizer = 0.0;
  double bound = 0.0;  // (E_sep - <H>) / A, unclipped
  bool detected = false;
  double entanglement_gap = 0.0;  // E_sep - E_0

  double clipped() const { return bound > 0.0 ? bound : 0.0; }
};

// Throws InvalidArgument if mean_energy lies outside [E_0, E_max] by more
// than 1e-6.
BoundReport robustness_lower_bound(const WitnessSpec& w, double mean_energy);

/// How the separability energy is obtained at each field value of a sweep.
struct EsepPolicy {
  enum class Kind { kExact, kClosedForm, kFixed };

  Kind kind = Kind::kExact;
  double fixed_value = 0.0;
  SeesawOptions seesaw;
  std::optional<Partition> partition;  // default: one block per site

  // "exact", "closed-form" or "fixed:<value>".
  static EsepPolicy parse(std::string_view text);
  std::string to_string() const;

  SepEnergyReport evaluate(const XXXParams& params,
                           const HermitianOperator& h) const;
};

struct SweepCell {
  double field_b = 0.0;
  double temperature = 0.0;  // 0 means the ground state
  BoundReport report;
};

// Rows ordered B-major, then T. Both grids must be ascending; temperatures
// must be >= 0, with T = 0 evaluated on the ground state.
std::vector<SweepCell> bound_sweep(const XXXParams& base,
                                   const EsepPolicy& policy,
                                   std::span<const double> temperatures,
                                   std::span<const double> fields);

}  // namespace enwit

#endif  // ENWIT_WITNESS_HPP_
