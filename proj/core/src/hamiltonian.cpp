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

#include "enwit/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "enwit/errors.hpp"

namespace enwit {

void XXXParams::validate() const {
  if (!(coupling_j > 0.0)) {
    throw InvalidArgument("XXXParams: coupling J must be > 0");
  }
  if (!std::isfinite(field_b)) throw InvalidArgument("XXXParams: B not finite");
  if (n_sites < 2) throw InvalidArgument("XXXParams: n_sites must be >= 2");
  if (double_count_two_site_bond &&
      !(n_sites == 2 && boundary == Boundary::kPeriodic)) {
    throw InvalidArgument(
        "XXXParams: double-count-two-site-bond requires n_sites = 2 with "
        "periodic boundary");
  }
}

HermitianOperator build_xxx(const XXXParams& p) {
  p.validate();
  const std::size_t n = p.n_sites;
  std::vector<PauliString> terms;
  auto add_bond = [&](std::size_t a, std::size_t b, double weight) {
    for (char axis : {'X', 'Y', 'Z'}) {
      std::string letters(n, 'I');
      letters[a] = axis;
      letters[b] = axis;
      terms.push_back({weight, std::move(letters)});
    }
  };
  for (std::size_t i = 0; i + 1 < n; ++i) add_bond(i, i + 1, p.coupling_j);
  if (p.boundary == Boundary::kPeriodic) {
    if (n > 2) {
      add_bond(n - 1, 0, p.coupling_j);
    } else if (p.double_count_two_site_bond) {
      add_bond(0, 1, p.coupling_j);
    }
  }
  if (p.field_b != 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string letters(n, 'I');
      letters[i] = 'Z';
      terms.push_back({p.field_b, std::move(letters)});
    }
  }
  return build_pauli(SystemShape::qubits(n), terms);
}

HermitianOperator build_pauli(const SystemShape& shape,
                              std::span<const PauliString> terms) {
  if (!shape.all_qubits()) {
    throw InvalidArgument("build_pauli: every site must be a qubit");
  }
  const std::size_t n = shape.num_sites();
  const auto dim = static_cast<Eigen::Index>(shape.dimension());
  Matrix h = Matrix::Zero(dim, dim);
  const Complex i_unit(0.0, 1.0);

  for (const PauliString& term : terms) {
    if (term.letters.size() != n) {
      throw InvalidArgument("build_pauli: term '" + term.letters + "' has " +
                            std::to_string(term.letters.size()) +
                            " letters, shape has " + std::to_string(n) +
                            " sites");
    }
    // Each Pauli product is a signed permutation: row r couples only to
    // column r ^ flip_mask.
    std::size_t flip_mask = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const char c = static_cast<char>(
          std::toupper(static_cast<unsigned char>(term.letters[k])));
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw InvalidArgument(std::string("build_pauli: unknown letter '") +
                              term.letters[k] + "'");
      }
      if (c == 'X' || c == 'Y') flip_mask |= std::size_t{1} << (n - 1 - k);
    }
    for (Eigen::Index r = 0; r < dim; ++r) {
      Complex phase = term.coefficient;
      for (std::size_t k = 0; k < n; ++k) {
        const bool bit = (static_cast<std::size_t>(r) >> (n - 1 - k)) & 1U;
        switch (std::toupper(static_cast<unsigned char>(term.letters[k]))) {
          case 'Y': phase *= bit ? i_unit : -i_unit; break;
          case 'Z': if (bit) phase = -phase; break;
          default: break;
        }
      }
      h(r, static_cast<Eigen::Index>(static_cast<std::size_t>(r) ^ flip_mask)) +=
          phase;
    }
  }
  return HermitianOperator(shape, std::move(h));
}

std::vector<PauliString> parse_pauli_terms(std::string_view text) {
  std::vector<PauliString> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string coef_str, letters, extra;
    if (!(fields >> coef_str) || coef_str.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return InvalidArgument("pauli terms line " + std::to_string(line_no) +
                             ": " + why);
    };
    if (!(fields >> letters)) throw fail("expected '<coef> <letters>'");
    if (fields >> extra) throw fail("unexpected token '" + extra + "'");
    double coef = 0.0;
    const char* first = coef_str.data();
    const char* last = first + coef_str.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, coef);
    if (ec != std::errc() || ptr != last || !std::isfinite(coef)) {
      throw fail("bad coefficient '" + coef_str + "'");
    }
    for (char& c : letters) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw fail("bad Pauli letters '" + letters + "'");
      }
    }
    if (!terms.empty() && terms.front().letters.size() != letters.size()) {
      throw fail("letter count differs from first term");
    }
    terms.push_back({coef, std::move(letters)});
  }
  return terms;
}

SpectrumSummary summarize(const HermitianOperator& h,
                          std::optional<double> esep) {
  const Eigen::VectorXd ev = eigenvalues(h);
  SpectrumSummary out;
  out.e_min = ev(0);
  out.e_max = ev(ev.size() - 1);
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (!out.levels.empty() &&
        ev(k) - out.levels.back().energy <= kDegeneracyTolerance) {
      ++out.levels.back().degeneracy;
    } else {
      out.levels.push_back({ev(k), 1});
    }
  }
  if (esep) out.gap_to_esep = std::max(0.0, *esep - out.e_min);
  return out;
}

}  // namespace enwit
