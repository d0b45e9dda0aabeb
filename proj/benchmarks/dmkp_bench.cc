// Copyright 2026 The dmkp Authors
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

#include "dmkp/algorithms.h"
#include "dmkp/generator.h"
#include "dmkp/oracle.h"

namespace dmkp {
namespace {

Instance BenchInstance(int m, int n) {
  return GenRandom({m, n, 50, 50, 20, 200, 99});
}

void BM_Distributed(benchmark::State& state) {
  const Instance inst = BenchInstance(64, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RunDistributedGreedy(inst).profit);
  state.counters["messages"] = static_cast<double>(RunDistributedGreedy(inst).metrics.messages);
}
BENCHMARK(BM_Distributed)->RangeMultiplier(2)->Range(2, 32);

void BM_Tree(benchmark::State& state) {
  const Instance inst = BenchInstance(64, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RunTreeGreedy(inst).profit);
  state.counters["messages"] = static_cast<double>(RunTreeGreedy(inst).metrics.messages);
}
BENCHMARK(BM_Tree)->RangeMultiplier(2)->Range(2, 32);

void BM_Simple(benchmark::State& state) {
  const Instance inst = BenchInstance(64, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RunSimpleGreedy(inst).profit);
}
BENCHMARK(BM_Simple)->RangeMultiplier(2)->Range(2, 32);

void BM_Enumeration(benchmark::State& state) {
  const Instance inst = GenRandom({static_cast<int>(state.range(0)), 4, 50, 50, 1, 100, 7});
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateOptimum(inst).optimum);
}
BENCHMARK(BM_Enumeration)->DenseRange(6, 10, 2);

void BM_BranchAndBound(benchmark::State& state) {
  const Instance inst = GenRandom({static_cast<int>(state.range(0)), 4, 50, 50, 1, 100, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(BranchAndBoundOptimum(inst, 20'000'000));
  }
}
BENCHMARK(BM_BranchAndBound)->DenseRange(6, 14, 4);

}  // namespace
}  // namespace dmkp

BENCHMARK_MAIN();
