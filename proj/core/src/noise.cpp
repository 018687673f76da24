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

#include "cfbnoise/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfbnoise {

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  __extension__ typedef unsigned __int128 u128;
  u128 m = static_cast<u128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

void validate_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 0.5)) {
    throw std::invalid_argument("noise rate eta must lie in [0, 0.5], got " + std::to_string(eta));
  }
}

Block64 noise_block(const NoiseSpec& spec, std::uint64_t frame_index,
                    std::uint64_t block_index) noexcept {
  if (spec.eta <= 0.0) return Block64{};
  CounterRng rng(spec.seed, static_cast<std::uint64_t>(StreamDomain::kNoise), frame_index,
                 block_index);
  std::uint64_t bits = 0;
  for (int i = 0; i < Block64::kBits; ++i) {
    bits = (bits << 1) | static_cast<std::uint64_t>(rng.bernoulli(spec.eta));
  }
  return Block64(bits);
}

NoisyBlocks apply_noise(std::span<const Block64> blocks, const NoiseSpec& spec,
                        std::uint64_t frame_index) {
  validate_eta(spec.eta);
  NoisyBlocks out;
  out.noisy.reserve(blocks.size());
  out.noise.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block64 z = noise_block(spec, frame_index, i);
    out.noise.push_back(z);
    out.noisy.push_back(blocks[i] ^ z);
  }
  return out;
}

}  // namespace cfbnoise
