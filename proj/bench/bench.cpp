// Copyright 2026 The Friction Authors
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

// Serial reference against the OpenMP kernels on generated markets. The
// first argument is the number of states; the generator seed is fixed.

#include <benchmark/benchmark.h>

#include "friction/market_file.hpp"
#include "friction/measures.hpp"
#include "friction/power.hpp"
#include "friction/report.hpp"

namespace friction {
namespace {

constexpr std::uint64_t kSeed = 11;
constexpr std::size_t kAssets = 4;

Execution mode(const benchmark::State& state) {
  return state.range(1) ? Execution::kParallel : Execution::kSerial;
}

void BM_NpbCheck(benchmark::State& state) {
  const Market m = to_market(generate_market(kSeed, static_cast<std::size_t>(state.range(0)), kAssets));
  const PricingPolytope p = build_polytope(m);
  for (auto _ : state) benchmark::DoNotOptimize(npb_check(p, mode(state)));
}

void BM_PowerLowerBound(benchmark::State& state) {
  const Market m = to_market(generate_market(kSeed, static_cast<std::size_t>(state.range(0)), kAssets));
  const PriceOracle oracle = PriceOracle::completion(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_lower_bound(oracle, m, 16, kSeed, mode(state)));
  }
}

void BM_Analyze(benchmark::State& state) {
  const MarketFile f = generate_market(kSeed, static_cast<std::size_t>(state.range(0)), kAssets);
  AnalysisOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_market(f, opts));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (std::int64_t n : {4, 8, 12}) {
    for (std::int64_t parallel : {0, 1}) b->Args({n, parallel});
  }
  b->ArgNames({"states", "parallel"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

BENCHMARK(BM_NpbCheck)->Apply(sizes);
BENCHMARK(BM_PowerLowerBound)->Apply(sizes);
BENCHMARK(BM_Analyze)->Apply(sizes);

}  // namespace
}  // namespace friction

BENCHMARK_MAIN();
