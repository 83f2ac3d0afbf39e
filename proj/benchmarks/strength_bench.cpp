// Copyright 2026 The Strength Authors
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

#include <random>

#include "strength/bounds.hpp"
#include "strength/constructions.hpp"
#include "strength/delta_sequence.hpp"
#include "strength/families.hpp"
#include "strength/fixtures.hpp"
#include "strength/oracle.hpp"

namespace {

using namespace strength;

Graph RandomGraph(int p, int q, std::uint64_t seed) {
  std::vector<Edge> pairs;
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) pairs.emplace_back(u, v);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(q);
  return Graph::FromEdges(p, pairs);
}

void BM_OracleRandom(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Graph g = RandomGraph(p, p * (p - 1) / 4, 17);
  OracleOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exact_strength(g, options).value);
}
BENCHMARK(BM_OracleRandom)->ArgsProduct({{8, 10, 12, 14}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_OraclePetersen(benchmark::State& state) {
  const Graph g = petersen_graph();
  OracleOptions options;
  options.symmetry = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_strength(g, options).value);
}
BENCHMARK(BM_OraclePetersen)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_XiHypercube(benchmark::State& state) {
  const Graph g = hypercube(static_cast<int>(state.range(0)));
  XiOptions options;
  options.i_max = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(xi_profile(g, options).xi);
}
BENCHMARK(BM_XiHypercube)->Args({4, 0})->Args({5, 4})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_Independence(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g).size);
}
BENCHMARK(BM_Independence)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_SequenceSearch(benchmark::State& state) {
  const Graph g = load_fixture("example22").graph;
  SequenceSearchOptions options;
  options.mode = state.range(0) ? SequenceMode::kAnyDegree : SequenceMode::kMinDegree;
  for (auto _ : state) benchmark::DoNotOptimize(find_delta_sequence(g, options).nodes);
}
BENCHMARK(BM_SequenceSearch)->Arg(0)->Arg(1);

void BM_BestPrefixHypercube(benchmark::State& state) {
  const Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(best_prefix_sequence(g).nodes);
}
BENCHMARK(BM_BestPrefixHypercube)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_Doubling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(doubled_hypercube(n).graph.order());
}
BENCHMARK(BM_Doubling)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
