// Copyright 2026 The swclab Authors
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

#include "swclab/automorphism.hpp"
#include "swclab/counterexample.hpp"
#include "swclab/extension.hpp"

namespace swclab {
namespace {

void BM_BuildCounterexample(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const int q = static_cast<int>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_counterexample(m, k, q));
  }
}
BENCHMARK(BM_BuildCounterexample)
    ->Args({1, 2, 2})
    ->Args({1, 2, 3})
    ->Args({1, 3, 2})
    ->Args({2, 3, 2})
    ->Unit(benchmark::kMillisecond);

void BM_ExtensionSearchRejects(benchmark::State& state) {
  CounterexamplePack pack = build_counterexample(
      1, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  AutGroup group = AutGroup::full(pack.alphabet);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension_search(pack.f, group));
  }
  state.counters["N"] = static_cast<double>(pack.length);
}
BENCHMARK(BM_ExtensionSearchRejects)
    ->Args({2, 2})
    ->Args({2, 3})
    ->Args({3, 2})
    ->Unit(benchmark::kMicrosecond);

void BM_ExtensionSearchIdentity(benchmark::State& state) {
  CounterexamplePack pack = build_counterexample(1, 3, 2);
  AutGroup group = AutGroup::full(pack.alphabet);
  CodeMap id = CodeMap::identity(pack.minus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension_search(id, group));
  }
}
BENCHMARK(BM_ExtensionSearchIdentity)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace swclab
