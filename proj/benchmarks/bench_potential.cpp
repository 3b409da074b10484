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

#include "udesign/design_verify.hpp"
#include "udesign/moments.hpp"
#include "udesign/unitary_set.hpp"

namespace {

void BM_FramePotential(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const udesign::UnitarySet x = udesign::sample_haar(d, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(udesign::frame_potential(x, 2));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_FramePotential)->ArgsProduct({{2, 4, 8}, {64, 256, 1024}})->Complexity();

void BM_WeightedPotential(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  udesign::UnitarySet x = udesign::sample_haar(3, n, 2);
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  const udesign::WeightedUnitarySet ws(std::move(x), std::move(w));
  for (auto _ : state) benchmark::DoNotOptimize(udesign::frame_potential(ws, 3));
}
BENCHMARK(BM_WeightedPotential)->Range(64, 2048);

void BM_HaarMoment(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udesign::haar_moment(3, t));
}
BENCHMARK(BM_HaarMoment)->DenseRange(4, 24, 10);

void BM_HaarMomentBruteForce(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udesign::haar_moment_bruteforce(3, t));
}
BENCHMARK(BM_HaarMomentBruteForce)->DenseRange(4, 8, 2);

}  // namespace
