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
#include "swclab/module.hpp"
#include "swclab/ring.hpp"
#include "swclab/socle.hpp"

namespace swclab {
namespace {

void BM_AutomorphismGroup(benchmark::State& state) {
  ModulePtr a = make_column_module(make_matrix_ring(2, 2),
                                   static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AutGroup::full(a));
  }
}
BENCHMARK(BM_AutomorphismGroup)->Arg(1)->Arg(2)->Arg(3)
    ->Unit(benchmark::kMillisecond);

void BM_LeftIdeals(benchmark::State& state) {
  Limits limits;
  limits.max_order = 128;
  RingPtr r = make_matrix_ring(2, static_cast<int>(state.range(0)), limits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_ideals_enumerate(*r, limits));
  }
}
BENCHMARK(BM_LeftIdeals)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SocleReport(benchmark::State& state) {
  ModulePtr a = make_column_module(make_matrix_ring(2, 2), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(socle_report(a));
  }
}
BENCHMARK(BM_SocleReport)->Unit(benchmark::kMillisecond);

void BM_PseudoInjectivity(benchmark::State& state) {
  RingPtr z8 = make_mod_n_ring(8);
  ModulePtr a = make_direct_sum(
      z8, {make_mod_m_module(z8, 2), make_regular_module(z8)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_pseudo_injective(a));
  }
}
BENCHMARK(BM_PseudoInjectivity)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace swclab

BENCHMARK_MAIN();
