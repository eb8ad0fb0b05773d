// Copyright 2026 The covker Authors.
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

#include "covker/discretization.hpp"
#include "covker/kernel.hpp"
#include "covker/partition_index.hpp"
#include "covker/polygon.hpp"

namespace {

using namespace covker;

void BM_IndexBuild(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), 2, 1000, 1);
  const auto sb = scaled_boxes(inst.boxes);
  for (auto _ : state) benchmark::DoNotOptimize(PartitionIndex(sb));
}
BENCHMARK(BM_IndexBuild)->RangeMultiplier(2)->Range(8, 128);

void BM_IndexQueryUpdate(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), 2, 1000, 2);
  PartitionIndex idx = PartitionIndex::from_instance(inst);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& b = idx.boxes()[i++ % idx.boxes().size()];
    benchmark::DoNotOptimize(idx.query(b));
    idx.update(b, Rational(i % 2 ? 2 : 1, i % 2 ? 1 : 2));
  }
}
BENCHMARK(BM_IndexQueryUpdate)->RangeMultiplier(2)->Range(8, 128);

void BM_NaiveQueryUpdate(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), 2, 1000, 2);
  const auto sb = scaled_boxes(inst.boxes);
  NaiveWeightTable table(coverage_discretization(sb));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& b = sb[i++ % sb.size()];
    benchmark::DoNotOptimize(table.query(b));
    table.update(b, Rational(i % 2 ? 2 : 1, i % 2 ? 1 : 2));
  }
}
BENCHMARK(BM_NaiveQueryUpdate)->RangeMultiplier(2)->Range(8, 128);

void BM_Greedy(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), 2, 200, 3);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_kernel(inst));
}
BENCHMARK(BM_Greedy)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
