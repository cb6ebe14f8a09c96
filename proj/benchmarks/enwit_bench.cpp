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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "enwit/enwit.hpp"

namespace {

using namespace enwit;

HermitianOperator chain(std::size_t n) {
  XXXParams p;
  p.field_b = 0.3;
  p.n_sites = n;
  return build_xxx(p);
}

void BM_Eigendecomposition(benchmark::State& state) {
  const HermitianOperator h = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig(h));
  state.SetLabel(std::to_string(h.dimension()) + "x" + std::to_string(h.dimension()));
}
BENCHMARK(BM_Eigendecomposition)->DenseRange(2, 8, 2);

void BM_GibbsState(benchmark::State& state) {
  const HermitianOperator h = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gibbs(h, 1.0));
}
BENCHMARK(BM_GibbsState)->DenseRange(2, 8, 2);

void BM_SeesawSeparabilityEnergy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianOperator h = chain(n);
  const Partition part = Partition::singletons(n);
  for (auto _ : state) benchmark::DoNotOptimize(esep_seesaw(h, part));
}
BENCHMARK(BM_SeesawSeparabilityEnergy)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_GridSeparabilityEnergy(benchmark::State& state) {
  const HermitianOperator h = chain(2);
  const Partition part = Partition::singletons(2);
  const auto res = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(esep_grid(h, part, res));
}
BENCHMARK(BM_GridSeparabilityEnergy)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_ExactRobustness(benchmark::State& state) {
  Rng rng(derive_seed(1, static_cast<std::uint64_t>(state.range(0))));
  const DensityMatrix rho = random_density_matrix(
      rng, SystemShape::qubits(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rg_exact_2q(rho));
}
BENCHMARK(BM_ExactRobustness)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_EnergyMeasurement(benchmark::State& state) {
  const HermitianOperator h = chain(2);
  const DensityMatrix rho = gibbs(h, 1.0).first;
  const auto shots = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(measure_energy(h, rho, shots, seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnergyMeasurement)->Range(1 << 10, 1 << 20);

}  // namespace

BENCHMARK_MAIN();
