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

#include <doctest.h>

#include <stdexcept>

#include "cfbnoise/verification.hpp"

using namespace cfbnoise;

namespace {

CfbTrace clean_trace(const DesCipher& des, std::size_t n) {
  return make_cfb_trace(des, Block64(0xABCDEF), random_blocks(6, 0, n), {0.0, 1});
}

}  // namespace

TEST_CASE("right key on a clean trace leaves zero residue") {
  const DesCipher des{DesKey(0x133457799BBCDFF1ULL)};
  const auto trace = clean_trace(des, 8);
  for (int w : stage_residual_weights(trace, des, 0, 8)) CHECK(w == 0);
  CHECK(verify_candidate(trace, des, {3, 0, 0}, 0));
  CHECK(verify_candidate(trace, des.key(), {8, 0, 0}, 0));
}

TEST_CASE("wrong key residue looks like a fair coin") {
  const DesCipher right{DesKey(1111)};
  const DesCipher wrong{DesKey(2222)};
  const auto trace = clean_trace(right, 400);
  double total = 0;
  for (int w : stage_residual_weights(trace, wrong, 0, 400)) total += w;
  CHECK(total / 400 == doctest::Approx(32).epsilon(0.03));
  CHECK_FALSE(verify_candidate(trace, wrong, {10, 5, 0}, 0));
}

TEST_CASE("residue is the noise when only the current block is hit") {
  const DesCipher des{DesKey(99)};
  auto trace = clean_trace(des, 4);
  const Block64 z(0x0000000000000107ULL);  // weight 4
  trace.noisy_ciphertexts[2] ^= z;
  CHECK(stage_residual_weight(trace, des, 2) == 4);
  // Block 3 now feeds from a corrupted block: the residue is an avalanche.
  CHECK(stage_residual_weight(trace, des, 3) > 10);
  CHECK(verify_candidate(trace, des, {1, 4, 0}, 2));
  CHECK_FALSE(verify_candidate(trace, des, {1, 3, 0}, 2));
}

TEST_CASE("every cipher input noisy means the right key is missed") {
  const DesCipher des{DesKey(5)};
  auto trace = clean_trace(des, 6);
  for (std::size_t i = 0; i < 5; ++i) trace.noisy_ciphertexts[i] ^= Block64(1);
  // Stages 1..5 all feed from corrupted blocks.
  CHECK_FALSE(verify_candidate(trace, des, {5, 3, 0}, 1));
}

TEST_CASE("verification rejects short traces") {
  const DesCipher des{DesKey(5)};
  const auto trace = clean_trace(des, 4);
  CHECK_THROWS_AS((void)verify_candidate(trace, des, {4, 0, 0}, 1), std::out_of_range);
  CHECK_THROWS_AS((void)stage_residual_weights(trace, des, 5, 0), std::out_of_range);
  CHECK_THROWS_AS((void)verify_candidate(trace, des, {0, 0, 0}, 0), std::invalid_argument);
}
