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

#include "cfbnoise/cfb.hpp"
#include "cfbnoise/des.hpp"
#include "cfbnoise/noise.hpp"
#include "cfbnoise/verification.hpp"

namespace {

using namespace cfbnoise;

void BM_DesEncrypt(benchmark::State& state) {
  const DesCipher des{DesKey(0x133457799BBCDFF1ULL)};
  Block64 b(0x0123456789ABCDEFULL);
  for (auto _ : state) {
    b = des.encrypt(b);
    benchmark::DoNotOptimize(b);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DesEncrypt);

// The exhaustive-search phase builds a fresh schedule for every candidate.
void BM_DesKeySchedule(benchmark::State& state) {
  std::uint64_t k = 1;
  for (auto _ : state) {
    DesCipher des{DesKey(k++)};
    benchmark::DoNotOptimize(des);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DesKeySchedule);

void BM_CfbEncrypt(benchmark::State& state) {
  const DesCipher des{DesKey(42)};
  const auto plain = random_blocks(1, 0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfb_encrypt(des, Block64(0), plain));
  state.SetBytesProcessed(state.iterations() * state.range(0) * 8);
}
BENCHMARK(BM_CfbEncrypt)->Arg(1024)->Arg(16384);

void BM_NoiseBlock(benchmark::State& state) {
  const NoiseSpec spec{0.0125, 3};
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(noise_block(spec, 0, i++));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NoiseBlock);

void BM_VerifyWrongCandidate(benchmark::State& state) {
  const DesCipher right{DesKey(7)};
  const auto trace = make_cfb_trace(right, Block64(0), random_blocks(1, 0, 21), {0.0125, 1});
  const AttackParams params{20, 7, 27};
  std::uint64_t k = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_candidate(trace, DesKey(k++), params, 1));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_VerifyWrongCandidate);

}  // namespace
