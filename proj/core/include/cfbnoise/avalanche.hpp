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

#ifndef CFBNOISE_AVALANCHE_HPP_
#define CFBNOISE_AVALANCHE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "cfbnoise/block.hpp"
#include "cfbnoise/cfb.hpp"
#include "cfbnoise/des.hpp"
#include "cfbnoise/noise.hpp"

namespace cfbnoise {

enum class AvalancheMode { kInputBit, kKeyBit };

struct AvalancheConfig {
  std::uint64_t key_trials = 100;
  std::uint64_t block_trials = 100;
  std::uint64_t seed = 0;
  AvalancheMode mode = AvalancheMode::kInputBit;
};

struct AvalancheEstimate {
  double alpha = 0.0;      ///< mean fraction of output bits flipped
  double std_error = 0.0;  ///< sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
};

/// Estimates the avalanche rate of any cipher built by `make_cipher(DesKey)`.
///
/// Each sample draws a key (one per key trial) and a block, flips one
/// uniformly chosen input bit (or effective key bit) and records the
/// fraction of the 64 output bits that changed.
template <typename CipherFactory>
[[nodiscard]] AvalancheEstimate measure_avalanche(CipherFactory&& make_cipher,
                                                  const AvalancheConfig& cfg) {
  if (cfg.key_trials < 1 || cfg.block_trials < 1) {
    throw std::invalid_argument("measure_avalanche: trial counts must be >= 1");
  }
  const auto domain = static_cast<std::uint64_t>(StreamDomain::kAvalanche);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t k = 0; k < cfg.key_trials; ++k) {
    CounterRng rng(cfg.seed, domain, k);
    const DesKey key(rng());
    const auto cipher = make_cipher(key);
    for (std::uint64_t b = 0; b < cfg.block_trials; ++b) {
      const Block64 block(rng());
      int flipped;
      if (cfg.mode == AvalancheMode::kInputBit) {
        const int position = 1 + static_cast<int>(rng.below(64));
        flipped = hamming_distance(cipher.encrypt(block),
                                   cipher.encrypt(block.with_bit_flipped(position)));
      } else {
        const int index = static_cast<int>(rng.below(DesKey::kEffectiveBits));
        const auto other = make_cipher(key.with_effective_bit_flipped(index));
        flipped = hamming_distance(cipher.encrypt(block), other.encrypt(block));
      }
      const double fraction = flipped / 64.0;
      sum += fraction;
      sum_sq += fraction * fraction;
    }
  }
  const auto n = static_cast<double>(cfg.key_trials * cfg.block_trials);
  AvalancheEstimate est;
  est.samples = cfg.key_trials * cfg.block_trials;
  est.alpha = sum / n;
  if (n > 1) {
    const double var = std::max(0.0, (sum_sq - n * est.alpha * est.alpha) / (n - 1));
    est.std_error = std::sqrt(var / n);
  }
  return est;
}

/// Avalanche rate of DES.
[[nodiscard]] AvalancheEstimate measure_avalanche(const AvalancheConfig& cfg);

}  // namespace cfbnoise

#endif  // CFBNOISE_AVALANCHE_HPP_
