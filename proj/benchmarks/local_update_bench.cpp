// Copyright 2026 The pauliframe Authors
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
//
// Microbenchmarks for the local tensor update against the dense embedded
// superoperator multiply, plus the dense conversion kernels. Run with
// --benchmark_min_time=2 for stable numbers.

#include <benchmark/benchmark.h>

#include "pauliframe/oracle.hpp"
#include "pauliframe/qubitframe.hpp"
#include "pauliframe/transfer.hpp"

namespace {

using namespace pframe;

PauliParameterTensor random_tensor(int m, RandomSource& rng) {
  PauliParameterTensor t{m, RealVector(pow_ll(4, m))};
  for (Eigen::Index i = 0; i < t.values.size(); ++i) t.values[i] = rng.normal();
  t.values[0] = 1.0;
  return t;
}

void BM_ApplyLocalOneQubit(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  RandomSource rng(1);
  const PauliParameterTensor t = random_tensor(m, rng);
  const PauliTransferMatrix a = ptm_of_unitary(random_unitary(2, rng));
  const std::vector<int> targets = {m / 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_local(t, a, targets));
  }
  state.SetItemsProcessed(state.iterations() * t.values.size());
}

void BM_ApplyLocalTwoQubit(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  RandomSource rng(2);
  const PauliParameterTensor t = random_tensor(m, rng);
  const PauliTransferMatrix a = ptm_of_unitary(random_unitary(4, rng));
  const std::vector<int> targets = {0, m - 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_local(t, a, targets));
  }
  state.SetItemsProcessed(state.iterations() * t.values.size());
}

void BM_DenseSuperopMultiply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  RandomSource rng(3);
  const PauliParameterTensor t = random_tensor(m, rng);
  const PauliTransferMatrix a = ptm_of_unitary(random_unitary(4, rng));
  const RealMatrix dense = embed_global(a, m, {0, m - 1});
  RealVector out(t.values.size());
  for (auto _ : state) {
    out.noalias() = dense * t.values;
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * t.values.size());
}

void BM_TildeFromRho(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  RandomSource rng(4);
  const ComplexMatrix rho = random_density(1 << m, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tilde_from_rho(rho));
  }
}

void BM_SixStateRightInverse(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProjectorSet set = six_state_set(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_right_inverse(set));
  }
}

}  // namespace

BENCHMARK(BM_ApplyLocalOneQubit)->DenseRange(2, 8);
BENCHMARK(BM_ApplyLocalTwoQubit)->DenseRange(2, 8);
BENCHMARK(BM_DenseSuperopMultiply)->DenseRange(2, 6);
BENCHMARK(BM_TildeFromRho)->DenseRange(1, 5);
BENCHMARK(BM_SixStateRightInverse)->DenseRange(1, 2);

BENCHMARK_MAIN();
