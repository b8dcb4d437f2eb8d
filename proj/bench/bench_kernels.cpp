// Copyright 2026 The Graphent Authors
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

// Serial reference versus OpenMP kernel for each parallel hot spot.

#include <random>

#include <benchmark/benchmark.h>

#include "graphent/canonical.hpp"
#include "graphent/entanglement.hpp"
#include "graphent/orbits.hpp"

namespace {

using namespace graphent;

Graph dense_random(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng() & 1u) g.toggle(a, b);
    }
  }
  return g;
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_serial(n));
}
void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(n));
}
BENCHMARK(BM_EnumerateSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_RankListSerial(benchmark::State& state) {
  const Graph g = dense_random(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_list_serial(g));
}
void BM_RankListParallel(benchmark::State& state) {
  const Graph g = dense_random(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_list(g));
}
BENCHMARK(BM_RankListSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankListParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_LowerBoundSerial(benchmark::State& state) {
  const Graph g = dense_random(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound_max_rank_serial(g));
}
void BM_LowerBoundParallel(benchmark::State& state) {
  const Graph g = dense_random(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound_max_rank(g));
}
BENCHMARK(BM_LowerBoundSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowerBoundParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

const std::vector<Graph>& seven_vertex_graphs() {
  static const auto graphs = enumerate_connected(7);
  return graphs;
}

void BM_PersistencyBatchSerial(benchmark::State& state) {
  const auto& graphs = seven_vertex_graphs();
  for (auto _ : state) benchmark::DoNotOptimize(pauli_persistency_batch_serial(graphs));
}
void BM_PersistencyBatchParallel(benchmark::State& state) {
  const auto& graphs = seven_vertex_graphs();
  for (auto _ : state) benchmark::DoNotOptimize(pauli_persistency_batch(graphs));
}
BENCHMARK(BM_PersistencyBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PersistencyBatchParallel)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  ClassifyOptions options;
  options.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(7, options));
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
