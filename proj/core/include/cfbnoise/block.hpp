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

#ifndef CFBNOISE_BLOCK_HPP_
#define CFBNOISE_BLOCK_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace cfbnoise {

/// A 64-bit cipher block.
///
/// Bits are numbered 1..64 from the most significant bit, matching the
/// DES standard's numbering, so `bit(1)` is the MSB of `value()`.
class Block64 {
 public:
  static constexpr int kBits = 64;

  constexpr Block64() noexcept = default;
  constexpr explicit Block64(std::uint64_t v) noexcept : value_(v) {}

  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return value_; }

  /// Hamming weight in [0, 64].
  [[nodiscard]] constexpr int weight() const noexcept { return std::popcount(value_); }

  [[nodiscard]] constexpr bool bit(int position) const noexcept {
    return ((value_ >> (kBits - position)) & 1u) != 0;
  }
  [[nodiscard]] constexpr Block64 with_bit_flipped(int position) const noexcept {
    return Block64(value_ ^ (std::uint64_t{1} << (kBits - position)));
  }

  constexpr Block64& operator^=(Block64 other) noexcept {
    value_ ^= other.value_;
    return *this;
  }
  friend constexpr Block64 operator^(Block64 a, Block64 b) noexcept { return a ^= b; }
  friend constexpr bool operator==(Block64, Block64) noexcept = default;

  /// Big-endian byte view (byte 0 holds bits 1..8).
  [[nodiscard]] std::array<std::uint8_t, 8> to_bytes() const noexcept;
  [[nodiscard]] static Block64 from_bytes(const std::array<std::uint8_t, 8>& bytes) noexcept;

  /// 16 upper-case hex digits.
  [[nodiscard]] std::string to_hex() const;
  /// Accepts exactly 16 hex digits; throws std::invalid_argument otherwise.
  [[nodiscard]] static Block64 from_hex(std::string_view hex);

 private:
  std::uint64_t value_ = 0;
};

/// Hamming distance between two blocks.
[[nodiscard]] constexpr int hamming_distance(Block64 a, Block64 b) noexcept {
  return (a ^ b).weight();
}

}  // namespace cfbnoise

#endif  // CFBNOISE_BLOCK_HPP_
