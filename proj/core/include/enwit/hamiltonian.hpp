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

#ifndef ENWIT_HAMILTONIAN_HPP_
#define ENWIT_HAMILTONIAN_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enwit/operator_core.hpp"

namespace enwit {

enum class Boundary { kOpen, kPeriodic };

/// Heisenberg XXX chain J sum_<ij> s_i . s_j + B sum_i sz_i on n qubits,
/// with Pauli matrices (not spin-1/2 operators). For two sites this is
/// J s1.s2 + B (sz1 + sz2).
struct XXXParams {
  double coupling_j = 1.0;
  double field_b = 0.0;
  std::size_t n_sites = 2;
  Boundary boundary = Boundary::kOpen;
  // Two-site periodic chains only: count the 1-2 bond twice, as chain
  // formulas with a wrap-around bond do.
  bool double_count_two_site_bond = false;

  void validate() const;
};

struct PauliString {
  double coefficient = 0.0;
  std::string letters;  // one of I, X, Y, Z per site
};

struct EnergyLevel {
  double energy = 0.0;
  std::size_t degeneracy = 0;
};

struct SpectrumSummary {
  double e_min = 0.0;  // ground energy E_0
  double e_max = 0.0;
  // Entanglement gap E_sep - E_0, floored at 0 when E_sep lies below E_0.
  std::optional<double> gap_to_esep;
  std::vector<EnergyLevel> levels;  // ascending, degeneracies merged
};

HermitianOperator build_xxx(const XXXParams& p);

// Sum of coefficient-weighted Pauli products; requires an all-qubit shape.
HermitianOperator build_pauli(const SystemShape& shape,
                              std::span<const PauliString> terms);

// Parses `<coef> <letters>` lines. Blank lines and lines starting with '#'
// are skipped. Throws InvalidArgument with the offending line number.
std::vector<PauliString> parse_pauli_terms(std::string_view text);

// Levels closer than this are merged when counting degeneracies.
inline constexpr double kDegeneracyTolerance = 1e-9;

SpectrumSummary summarize(const HermitianOperator& h,
                          std::optional<double> esep = std::nullopt);

}  // namespace enwit

#endif  // ENWIT_HAMILTONIAN_HPP_
