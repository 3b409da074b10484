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


#include <random>

#include <benchmark/benchmark.h>

#include "udesign/design_verify.hpp"
#include "udesign/signature.hpp"
#include "udesign/unitary_set.hpp"
#include "udesign/zonal.hpp"

namespace {

void BM_ZonalEval(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 engine(3);
  const udesign::Matrix u = udesign::haar_unitary(d, engine);
  const udesign::Matrix m = udesign::haar_unitary(d, engine);
  const udesign::Signature mu = udesign::Signature::padded(d, {2}, {-2});
  for (auto _ : state) benchmark::DoNotOptimize(udesign::zonal_eval(mu, u, m));
}
BENCHMARK(BM_ZonalEval)->DenseRange(3, 9, 2);

void BM_ZonalDesignCheck(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const udesign::WeightedUnitarySet x(udesign::sample_haar(3, 128, 4));
  for (auto _ : state) benchmark::DoNotOptimize(udesign::zonal_design_check(x, t));
}
BENCHMARK(BM_ZonalDesignCheck)->DenseRange(1, 3);

void BM_MomentOperator(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const udesign::WeightedUnitarySet x(udesign::sample_haar(d, 64, 5));
  for (auto _ : state) benchmark::DoNotOptimize(udesign::moment_operator_residual(x, 2));
}
BENCHMARK(BM_MomentOperator)->DenseRange(2, 6, 2);

}  // namespace
