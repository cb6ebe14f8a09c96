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

#include "enwit/witness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "enwit/errors.hpp"
#include "enwit/thermal.hpp"

namespace enwit {

HermitianOperator WitnessSpec::unnormalized() const {
  return hamiltonian - esep * HermitianOperator::identity(hamiltonian.shape());
}

HermitianOperator WitnessSpec::normalized() const {
  return (1.0 / normalizer) * unnormalized();
}

WitnessSpec make_witness(const HermitianOperator& h,
                         const SepEnergyReport& esep) {
  if (!std::isfinite(esep.esep)) {
    throw InvalidArgument("make_witness: E_sep is not finite");
  }
  const Eigen::VectorXd ev = eigenvalues(h);
  const double e_min = ev(0);
  const double e_max = ev(ev.size() - 1);
  const double a = std::max(e_max - esep.esep, esep.esep - e_min);
  if (!(a > 1e-12)) {
    throw InvalidArgument(
        "make_witness: normalizer A vanishes (constant Hamiltonian)");
  }
  return WitnessSpec{h,      esep.esep,   e_min,
                     e_max,  a,           esep.source,
                     esep.esep < e_min - 1e-9};
}

BoundReport robustness_lower_bound(const WitnessSpec& w, double mean_energy) {
  if (!(mean_energy >= w.e_min - 1e-6 && mean_energy <= w.e_max + 1e-6)) {
    throw InvalidArgument("robustness_lower_bound: mean energy " +
                          std::to_string(mean_energy) +
                          " outside the spectral range");
  }
  BoundReport r;
  r.mean_energy = mean_energy;
  r.esep = w.esep;
  r.normalizer = w.normalizer;
  r.bound = (w.esep - mean_energy) / w.normalizer;
  r.detected = r.bound > 0.0;
  r.entanglement_gap = w.esep - w.e_min;
  return r;
}

EsepPolicy EsepPolicy::parse(std::string_view text) {
  EsepPolicy p;
  if (text == "exact") {
    p.kind = Kind::kExact;
  } else if (text == "closed-form") {
    p.kind = Kind::kClosedForm;
  } else if (text.starts_with("fixed:")) {
    p.kind = Kind::kFixed;
    std::string_view num = text.substr(6);
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(num.data(), num.data() + num.size(), p.fixed_value);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size() ||
        !std::isfinite(p.fixed_value)) {
      throw InvalidArgument("E_sep policy: bad fixed value in '" +
                            std::string(text) + "'");
    }
  } else {
    throw InvalidArgument("E_sep policy: expected exact | closed-form | "
                          "fixed:<value>, got '" + std::string(text) + "'");
  }
  return p;
}

std::string EsepPolicy::to_string() const {
  switch (kind) {
    case Kind::kExact: return "exact";
    case Kind::kClosedForm: return "closed-form";
    case Kind::kFixed: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "fixed:%.17g", fixed_value);
      return buf;
    }
  }
  return "unknown";
}

SepEnergyReport EsepPolicy::evaluate(const XXXParams& params,
                                     const HermitianOperator& h) const {
  switch (kind) {
    case Kind::kExact:
      return esep_seesaw(h,
                         partition ? *partition
                                   : Partition::singletons(params.n_sites),
                         seesaw);
    case Kind::kClosedForm:
      return esep_closed_form_report(params);
    case Kind::kFixed:
      return esep_reference(fixed_value);
  }
  throw InvalidArgument("E_sep policy: unknown kind");
}

namespace {

void require_ascending(std::span<const double> grid, const char* what) {
  if (grid.empty()) {
    throw InvalidArgument(std::string("bound_sweep: empty ") + what + " grid");
  }
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) {
      throw InvalidArgument(std::string("bound_sweep: ") + what +
                            " grid not ascending");
    }
  }
}

}  // namespace

std::vector<SweepCell> bound_sweep(const XXXParams& base,
                                   const EsepPolicy& policy,
                                   std::span<const double> temperatures,
                                   std::span<const double> fields) {
  require_ascending(temperatures, "temperature");
  require_ascending(fields, "field");
  if (temperatures.front() < 0.0) {
    throw InvalidArgument("bound_sweep: negative temperature");
  }
  std::vector<SweepCell> rows;
  rows.reserve(temperatures.size() * fields.size());
  for (double b : fields) {
    XXXParams params = base;
    params.field_b = b;
    const HermitianOperator h = build_xxx(params);
    const WitnessSpec w = make_witness(h, policy.evaluate(params, h));
    const SpectralDecomposition spec = eig(h);
    for (double t : temperatures) {
      const double mean = t == 0.0 ? expectation(h, ground_state(h))
                                   : thermal_point(spec, t).mean_energy;
      rows.push_back({b, t, robustness_lower_bound(w, mean)});
    }
  }
  return rows;
}

}  // namespace enwit
