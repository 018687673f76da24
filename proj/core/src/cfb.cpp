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

#include "cfbnoise/cfb.hpp"

#include <utility>

namespace cfbnoise {

std::vector<Block64> cfb_encrypt(DesKey key, Block64 iv, std::span<const Block64> plaintexts) {
  return cfb_encrypt(DesCipher(key), iv, plaintexts);
}

std::vector<Block64> cfb_decrypt(DesKey key, Block64 iv, std::span<const Block64> received) {
  return cfb_decrypt(DesCipher(key), iv, received);
}

CfbTrace make_cfb_trace(const DesCipher& cipher, Block64 iv, std::vector<Block64> plaintexts,
                        const NoiseSpec& noise, std::uint64_t frame_index) {
  CfbTrace trace;
  trace.iv = iv;
  trace.ciphertexts = cfb_encrypt(cipher, iv, plaintexts);
  trace.plaintexts = std::move(plaintexts);
  auto noisy = apply_noise(trace.ciphertexts, noise, frame_index);
  trace.noisy_ciphertexts = std::move(noisy.noisy);
  trace.noise_blocks = std::move(noisy.noise);
  return trace;
}

std::vector<Block64> random_blocks(std::uint64_t seed, std::uint64_t frame_index,
                                   std::size_t count) {
  CounterRng rng(seed, static_cast<std::uint64_t>(StreamDomain::kPlaintext), frame_index);
  std::vector<Block64> out(count);
  for (auto& b : out) b = Block64(rng());
  return out;
}

}  // namespace cfbnoise
