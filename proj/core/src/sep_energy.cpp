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

#include "enwit/sep_energy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "enwit/errors.hpp"

namespace enwit {

Partition::Partition(std::vector<std::vector<std::size_t>> blocks,
                     std::size_t n_sites)
    : blocks_(std::move(blocks)), n_sites_(n_sites) {
  if (blocks_.size() < 2) {
    throw InvalidArgument("Partition: need at least 2 blocks");
  }
  std::vector<bool> seen(n_sites_, false);
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidArgument("Partition: empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t s : block) {
      if (s >= n_sites_) {
        throw InvalidArgument("Partition: site " + std::to_string(s) +
                              " out of range");
      }
      if (seen[s]) {
        throw InvalidArgument("Partition: site " + std::to_string(s) +
                              " in more than one block");
      }
      seen[s] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidArgument("Partition: blocks do not cover every site");
  }
}

Partition Partition::singletons(std::size_t n_sites) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t s = 0; s < n_sites; ++s) blocks.push_back({s});
  return Partition(std::move(blocks), n_sites);
}

Partition Partition::parse(std::string_view text, std::size_t n_sites) {
  std::vector<std::vector<std::size_t>> blocks(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '|') {
      blocks.emplace_back();
      ++pos;
    } else if (c == ',' || c == ' ') {
      ++pos;
    } else {
      std::size_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) {
        throw InvalidArgument("Partition: cannot parse '" + std::string(text) +
                              "'");
      }
      blocks.back().push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
    }
  }
  return Partition(std::move(blocks), n_sites);
}

std::size_t Partition::block_dimension(const SystemShape& shape,
                                       std::size_t b) const {
  std::size_t d = 1;
  for (std::size_t s : blocks_.at(b)) d *= shape.local_dim(s);
  return d;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out << '|';
    for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
      if (k) out << ',';
      out << blocks_[b][k];
    }
  }
  return out.str();
}

namespace {

// Maps every full basis index to its index inside each block.
struct BlockLayout {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> local_index;  // [block][full index]

  BlockLayout(const SystemShape& shape, const Partition& partition) {
    if (partition.num_sites() != shape.num_sites()) {
      throw InvalidArgument("partition covers " +
                            std::to_string(partition.num_sites()) +
                            " sites, operator has " +
                            std::to_string(shape.num_sites()));
    }
    const std::size_t n = shape.dimension();
    const std::size_t nb = partition.num_blocks();
    dims.resize(nb);
    local_index.assign(nb, std::vector<std::size_t>(n));
    for (std::size_t b = 0; b < nb; ++b) {
      dims[b] = partition.block_dimension(shape, b);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::vector<std::size_t> digits = shape.digits(i);
      for (std::size_t b = 0; b < nb; ++b) {
        std::size_t idx = 0;
        for (std::size_t s : partition.blocks()[b]) {
          idx = idx * shape.local_dim(s) + digits[s];
        }
        local_index[b][i] = idx;
      }
    }
  }

  std::size_t num_blocks() const { return dims.size(); }
  std::size_t full_dimension() const { return local_index.front().size(); }

  // Embedding R (full x block dims) with R(i, a) = prod of the other block
  // amplitudes at i when block `target` sits at a; R^dagger H R is the
  // effective operator of the target block.
  Matrix embedding(std::size_t target,
                   const std::vector<const Vector*>& states) const {
    const std::size_t n = full_dimension();
    Matrix r = Matrix::Zero(static_cast<Eigen::Index>(n),
                            static_cast<Eigen::Index>(dims[target]));
    for (std::size_t i = 0; i < n; ++i) {
      Complex amp = 1.0;
      for (std::size_t b = 0; b < num_blocks(); ++b) {
        if (b != target) amp *= (*states[b])(
            static_cast<Eigen::Index>(local_index[b][i]));
      }
      r(static_cast<Eigen::Index>(i),
        static_cast<Eigen::Index>(local_index[target][i])) = amp;
    }
    return r;
  }

  Vector product(const std::vector<Vector>& states) const {
    const std::size_t n = full_dimension();
    Vector psi(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      Complex amp = 1.0;
      for (std::size_t b = 0; b < num_blocks(); ++b) {
        amp *= states[b](static_cast<Eigen::Index>(local_index[b][i]));
      }
      psi(static_cast<Eigen::Index>(i)) = amp;
    }
    return psi;
  }
};

void require_unit_states(const BlockLayout& layout,
                         const ProductStateAnsatz& ansatz) {
  if (ansatz.block_states.size() != layout.num_blocks()) {
    throw InvalidArgument("ProductStateAnsatz: one state per block required");
  }
  for (std::size_t b = 0; b < layout.num_blocks(); ++b) {
    const Vector& v = ansatz.block_states[b];
    if (v.size() != static_cast<Eigen::Index>(layout.dims[b])) {
      throw InvalidArgument("ProductStateAnsatz: block state dimension");
    }
    if (std::abs(v.norm() - 1.0) > 1e-12) {
      throw InvalidArgument("ProductStateAnsatz: block state not unit norm");
    }
  }
}

}  // namespace

Vector product_state_vector(const SystemShape& shape,
                            const ProductStateAnsatz& ansatz) {
  const BlockLayout layout(shape, ansatz.partition);
  require_unit_states(layout, ansatz);
  return layout.product(ansatz.block_states);
}

ProductStateAnsatz random_product_state(Rng& rng, const SystemShape& shape,
                                        const Partition& partition) {
  ProductStateAnsatz out{partition, {}};
  for (std::size_t b = 0; b < partition.num_blocks(); ++b) {
    out.block_states.push_back(
        random_unit_vector(rng, partition.block_dimension(shape, b)));
  }
  return out;
}

Vector qubit_from_bloch(double theta, double phi) {
  Vector v(2);
  v << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
  return v;
}

BlochAngles bloch_angles(const Vector& qubit) {
  if (qubit.size() != 2) throw InvalidArgument("bloch_angles: not a qubit");
  const double a = std::abs(qubit(0));
  const double b = std::abs(qubit(1));
  BlochAngles out;
  out.theta = 2.0 * std::atan2(b, a);
  if (a > 0.0 && b > 0.0) {
    out.phi = std::arg(qubit(1)) - std::arg(qubit(0));
    if (out.phi < 0.0) out.phi += 2.0 * std::numbers::pi;
    if (out.phi >= 2.0 * std::numbers::pi) out.phi -= 2.0 * std::numbers::pi;
  }
  return out;
}

std::string_view to_string(EsepSource source) {
  switch (source) {
    case EsepSource::kExactOptimized: return "exact-optimized";
    case EsepSource::kClosedForm: return "closed-form";
    case EsepSource::kUserSupplied: return "user-supplied";
  }
  return "unknown";
}

SepEnergyReport esep_seesaw(const HermitianOperator& h,
                            const Partition& partition,
                            const SeesawOptions& options) {
  if (options.restarts < 1) {
    throw InvalidArgument("esep_seesaw: restarts must be >= 1");
  }
  const BlockLayout layout(h.shape(), partition);
  const std::size_t nb = layout.num_blocks();
  const Matrix& hm = h.matrix();
  const double scale = std::max(1.0, hm.cwiseAbs().maxCoeff());

  SepEnergyReport best;
  best.esep = std::numeric_limits<double>::infinity();
  best.restarts_used = options.restarts;
  best.source = EsepSource::kExactOptimized;
  bool best_converged = false;

  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    Rng rng(derive_seed(options.seed, restart));
    std::vector<Vector> states;
    for (std::size_t b = 0; b < nb; ++b) {
      states.push_back(random_unit_vector(rng, layout.dims[b]));
    }
    std::vector<const Vector*> refs(nb);
    for (std::size_t b = 0; b < nb; ++b) refs[b] = &states[b];

    double energy = expectation(h, layout.product(states));
    bool converged = false;
    for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
      const double sweep_start = energy;
      for (std::size_t b = 0; b < nb; ++b) {
        const Matrix r = layout.embedding(b, refs);
        const Matrix effective = r.adjoint() * hm * r;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(effective);
        if (solver.info() != Eigen::Success) {
          throw NumericalError("esep_seesaw: block eigensolver failed");
        }
        const double next = solver.eigenvalues()(0);
        if (next > energy + 1e-10 * scale) {
          throw NumericalError("esep_seesaw: energy increased during sweep");
        }
        states[b] = solver.eigenvectors().col(0).normalized();
        energy = std::min(energy, next);
      }
      if (sweep_start - energy < options.tolerance) {
        converged = true;
        break;
      }
    }
    // Recompute from the final state so the report matches its minimizer.
    energy = expectation(h, layout.product(states));
    if (energy < best.esep) {
      best.esep = energy;
      best.minimizer = ProductStateAnsatz{partition, states};
      best_converged = converged;
    }
  }
  best.converged = best_converged;
  return best;
}

namespace {

// Unit vectors of dimension d on a nested grid: d-1 magnitude angles in
// [0, pi] (half-angle convention, resolution+1 points including both ends)
// and d-1 relative phases in [0, 2 pi) (resolution points). For d = 2 this
// is the Bloch-sphere grid theta_k = pi k / res, phi_m = 2 pi m / res.
std::vector<Vector> grid_states(std::size_t d, std::size_t resolution) {
  const std::size_t n_angles = d - 1;
  std::vector<std::size_t> counter(2 * n_angles, 0);
  std::vector<Vector> out;
  while (true) {
    Vector v(static_cast<Eigen::Index>(d));
    double remaining = 1.0;
    for (std::size_t k = 0; k < n_angles; ++k) {
      const double alpha = std::numbers::pi * static_cast<double>(counter[k]) /
                           static_cast<double>(resolution);
      v(static_cast<Eigen::Index>(k)) = remaining * std::cos(alpha / 2.0);
      remaining *= std::sin(alpha / 2.0);
    }
    v(static_cast<Eigen::Index>(d - 1)) = remaining;
    for (std::size_t k = 0; k < n_angles; ++k) {
      const double phi = 2.0 * std::numbers::pi *
                         static_cast<double>(counter[n_angles + k]) /
                         static_cast<double>(resolution);
      v(static_cast<Eigen::Index>(k + 1)) *= std::polar(1.0, phi);
    }
    out.push_back(v);

    std::size_t k = 0;
    for (; k < counter.size(); ++k) {
      const std::size_t limit = k < n_angles ? resolution + 1 : resolution;
      if (++counter[k] < limit) break;
      counter[k] = 0;
    }
    if (k == counter.size()) break;
  }
  return out;
}

// Minimum of b^dagger M b over the qubit grid states of grid_states(2, res).
// At fixed theta the value is a + r cos(phi + psi), so only the grid phases
// adjacent to phi = pi - psi can attain the minimum over phi.
double qubit_grid_min(const Matrix& m, std::size_t resolution) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(resolution);
  const double psi = std::arg(m(0, 1));
  const auto res = static_cast<long>(resolution);
  long center = std::lround((std::numbers::pi - psi) / step);
  center = ((center % res) + res) % res;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= resolution; ++k) {
    const double theta = std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(resolution);
    const double p0 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
    const double p1 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    const double diag = m(0, 0).real() * p0 + m(1, 1).real() * p1;
    for (long dm = -1; dm <= 1; ++dm) {
      const long idx = ((center + dm) % res + res) % res;
      const double phi = step * static_cast<double>(idx);
      const double off = std::sin(theta) * (m(0, 1).real() * std::cos(phi) -
                                            m(0, 1).imag() * std::sin(phi));
      best = std::min(best, diag + off);
    }
  }
  return best;
}

}  // namespace

double esep_grid(const HermitianOperator& h, const Partition& partition,
                 std::size_t resolution) {
  if (resolution < 8) throw InvalidArgument("esep_grid: resolution must be >= 8");
  const BlockLayout layout(h.shape(), partition);
  const std::size_t nb = layout.num_blocks();
  for (std::size_t d : layout.dims) {
    if (d > 4) {
      throw InvalidArgument("esep_grid: block dimension " + std::to_string(d) +
                            " too large for the grid oracle (max 4)");
    }
  }

  std::vector<std::vector<Vector>> grids;
  double evaluations = 1.0;
  for (std::size_t b = 0; b < nb; ++b) {
    grids.push_back(grid_states(layout.dims[b], resolution));
    evaluations *= static_cast<double>(grids.back().size());
  }
  if (evaluations > kMaxGridEvaluations) {
    throw InvalidArgument("esep_grid: grid has too many points");
  }

  // The last block is scanned through real features of b b^dagger so that
  // b^dagger M b becomes a dot product of length d^2. Features are stored
  // feature-major for a contiguous inner loop.
  const std::size_t last = nb - 1;
  const auto dl = static_cast<Eigen::Index>(layout.dims[last]);
  const auto n_features = static_cast<std::size_t>(dl * dl);
  const std::size_t n_last = grids[last].size();
  std::vector<std::vector<double>> features(n_features,
                                            std::vector<double>(n_last));
  for (std::size_t s = 0; s < n_last; ++s) {
    const Vector& v = grids[last][s];
    std::size_t f = 0;
    for (Eigen::Index a = 0; a < dl; ++a) features[f++][s] = std::norm(v(a));
    for (Eigen::Index a = 0; a < dl; ++a) {
      for (Eigen::Index c = a + 1; c < dl; ++c) {
        const Complex q = std::conj(v(a)) * v(c);
        features[f++][s] = 2.0 * q.real();
        features[f++][s] = -2.0 * q.imag();
      }
    }
  }

  const Matrix& hm = h.matrix();
  std::vector<std::size_t> counter(last, 0);
  std::vector<const Vector*> refs(nb, nullptr);
  const Vector placeholder = Vector::Ones(dl);
  refs[last] = &placeholder;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> coeffs(n_features);
  std::vector<double> values(n_last);
  while (true) {
    for (std::size_t b = 0; b < last; ++b) refs[b] = &grids[b][counter[b]];
    const Matrix r = layout.embedding(last, refs);
    const Matrix m = r.adjoint() * hm * r;
    std::size_t f = 0;
    for (Eigen::Index a = 0; a < dl; ++a) coeffs[f++] = m(a, a).real();
    for (Eigen::Index a = 0; a < dl; ++a) {
      for (Eigen::Index c = a + 1; c < dl; ++c) {
        coeffs[f++] = m(a, c).real();
        coeffs[f++] = m(a, c).imag();
      }
    }
    if (dl == 2) {
      best = std::min(best, qubit_grid_min(m, resolution));
    } else {
      std::fill(values.begin(), values.end(), 0.0);
      for (std::size_t k = 0; k < n_features; ++k) {
        const double ck = coeffs[k];
        const double* feat = features[k].data();
        double* val = values.data();
        for (std::size_t s = 0; s < n_last; ++s) val[s] += ck * feat[s];
      }
      best = std::min(best, *std::min_element(values.begin(), values.end()));
    }

    std::size_t k = 0;
    for (; k < last; ++k) {
      if (++counter[k] < grids[k].size()) break;
      counter[k] = 0;
    }
    if (k == last) break;
  }
  return best;
}

double esep_closed_form_xxx(const XXXParams& p) {
  p.validate();
  if (p.n_sites != 2) {
    throw InvalidArgument("esep_closed_form_xxx: requires n_sites = 2");
  }
  const double j = p.double_count_two_site_bond ? 2.0 * p.coupling_j
                                                : p.coupling_j;
  const double b = std::abs(p.field_b);
  if (b <= 2.0 * j) return -j - b * b / (2.0 * j);
  return j - 2.0 * b;
}

SepEnergyReport esep_closed_form_report(const XXXParams& p) {
  SepEnergyReport out;
  out.esep = esep_closed_form_xxx(p);
  out.source = EsepSource::kClosedForm;
  out.restarts_used = 0;
  out.converged = true;
  // Bloch vectors (sin t, 0, cos t) and (-sin t, 0, cos t), cos t = c*.
  const double j = p.double_count_two_site_bond ? 2.0 * p.coupling_j
                                                : p.coupling_j;
  const double c = std::clamp(-p.field_b / (2.0 * j), -1.0, 1.0);
  const double theta = std::acos(c);
  out.minimizer = ProductStateAnsatz{
      Partition::singletons(2),
      {qubit_from_bloch(theta, 0.0), qubit_from_bloch(theta, std::numbers::pi)}};
  return out;
}

SepEnergyReport esep_reference(double value) {
  SepEnergyReport out;
  out.esep = value;
  out.source = EsepSource::kUserSupplied;
  out.restarts_used = 0;
  out.converged = true;
  return out;
}

}  // namespace enwit
