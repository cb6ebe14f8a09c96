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

#include "enwit/measurement.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <string>
#include <vector>

#include "enwit/errors.hpp"
#include "enwit/hamiltonian.hpp"
#include "enwit/random.hpp"

namespace enwit {

EnergyEstimate measure_energy(const HermitianOperator& h,
                              const DensityMatrix& rho, std::size_t shots,
                              std::uint64_t seed) {
  if (shots < 1) throw InvalidArgument("measure_energy: shots must be >= 1");
  if (!(h.shape() == rho.shape())) {
    throw InvalidArgument("measure_energy: shape mismatch");
  }
  const SpectralDecomposition spec = eig(h);
  const Matrix& v = spec.eigenvectors;
  const Eigen::VectorXcd diag =
      (v.adjoint() * rho.matrix() * v).diagonal();

  std::vector<double> levels;
  std::vector<double> probs;
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    const double p = std::max(0.0, diag(k).real());
    if (!levels.empty() &&
        spec.eigenvalues(k) - levels.back() <= kDegeneracyTolerance) {
      probs.back() += p;
    } else {
      levels.push_back(spec.eigenvalues(k));
      probs.push_back(p);
    }
  }
  std::vector<double> cumulative(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
  if (std::abs(cumulative.back() - 1.0) > 1e-9) {
    throw NumericalError("measure_energy: outcome probabilities sum to " +
                         std::to_string(cumulative.back()));
  }

  Rng rng(seed);
  std::vector<std::size_t> counts(levels.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++counts[static_cast<std::size_t>(it - cumulative.begin())];
  }

  const double n = static_cast<double>(shots);
  double mean = 0.0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    mean += (static_cast<double>(counts[k]) / n) * levels[k];
  }
  EnergyEstimate est;
  est.shots = shots;
  est.seed = seed;
  est.mean = mean;
  est.single_shot = shots == 1;
  if (shots > 1) {
    double ss = 0.0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const double d = levels[k] - mean;
      ss += static_cast<double>(counts[k]) * d * d;
    }
    est.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return est;
}

BoundInterval bound_with_confidence(const WitnessSpec& w,
                                    const EnergyEstimate& est, double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw InvalidArgument("bound_with_confidence: z must be >= 0");
  }
  const double half = z * est.standard_error;
  BoundInterval out;
  out.lower = (w.esep - est.mean - half) / w.normalizer;
  out.upper = (w.esep - est.mean + half) / w.normalizer;
  out.detected = out.lower > 0.0;
  return out;
}

}  // namespace enwit
