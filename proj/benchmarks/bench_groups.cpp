// Copyright 2026 The udesign Authors
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

#include "udesign/group_designs.hpp"
#include "udesign/weighted_opt.hpp"

namespace {

void BM_ChauDesign(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udesign::chau_design(d).size());
}
BENCHMARK(BM_ChauDesign)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CliffordDesign(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udesign::clifford_design(q).size());
}
BENCHMARK(BM_CliffordDesign)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FitWeights(benchmark::State& state) {
  const udesign::UnitarySet pool = udesign::chau_design(3);
  for (auto _ : state) benchmark::DoNotOptimize(udesign::fit_weights(pool, 2, 1e-8).gap);
}
BENCHMARK(BM_FitWeights)->Unit(benchmark::kMillisecond);

}  // namespace
