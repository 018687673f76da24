// Copyright 2026 The cfbnoise Authors.
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

#include "cfbnoise/attack_model.hpp"
#include "cfbnoise/channel_model.hpp"
#include "cfbnoise/sweep.hpp"

namespace {

using namespace cfbnoise;

void BM_OptimizeParameters(benchmark::State& state) {
  const AttackConstraints c;
  const LinearApproxSpec approx;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_parameters(0.0125, c, approx));
}
BENCHMARK(BM_OptimizeParameters);

void BM_MainCapacity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(main_capacity(0.5, 0.0125));
}
BENCHMARK(BM_MainCapacity);

void BM_ErrorLawS3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(error_weight_distribution(MarkovState::kS3, 0.45, 0.0125));
  }
}
BENCHMARK(BM_ErrorLawS3);

void BM_DefaultSweep(benchmark::State& state) {
  const SweepConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg, 1));
}
BENCHMARK(BM_DefaultSweep)->Unit(benchmark::kMillisecond);

}  // namespace
