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

#ifndef CFBNOISE_NOISE_HPP_
#define CFBNOISE_NOISE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "cfbnoise/block.hpp"

namespace cfbnoise {

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based random stream.
///
/// A stream is identified by a seed plus up to three coordinates (for noise:
/// a domain tag, the frame index and the block index), so any worker can
/// reproduce any stream without shared state.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                       std::uint64_t c = 0) noexcept
      : state_(mix64(mix64(mix64(seed ^ 0x6A09E667F3BCC908ULL) + a) + b) + c) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound); bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

  constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

 private:
  std::uint64_t state_;
};

/// Stream domain tags so independent uses of one seed never collide.
enum class StreamDomain : std::uint64_t {
  kNoise = 1,
  kPlaintext = 2,
  kKey = 3,
  kAvalanche = 4,
  kRanking = 5,
  kTrial = 6,
};

/// Bit-flip noise: every bit flips independently with probability eta.
struct NoiseSpec {
  double eta = 0.0;
  std::uint64_t seed = 0;
};

/// 64 i.i.d. Bernoulli(eta) bits for block `block_index` of frame `frame_index`.
[[nodiscard]] Block64 noise_block(const NoiseSpec& spec, std::uint64_t frame_index,
                                  std::uint64_t block_index) noexcept;

struct NoisyBlocks {
  std::vector<Block64> noisy;
  std::vector<Block64> noise;
};

/// XORs fresh noise into every block. Throws std::invalid_argument unless
/// eta is in [0, 0.5].
[[nodiscard]] NoisyBlocks apply_noise(std::span<const Block64> blocks, const NoiseSpec& spec,
                                      std::uint64_t frame_index = 0);

void validate_eta(double eta);

}  // namespace cfbnoise

#endif  // CFBNOISE_NOISE_HPP_
