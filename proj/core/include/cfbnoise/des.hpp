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

#ifndef CFBNOISE_DES_HPP_
#define CFBNOISE_DES_HPP_

#include <array>
#include <cstdint>

#include "cfbnoise/block.hpp"

namespace cfbnoise {

/// A DES key in the standard 64-bit layout.
///
/// The low bit of every byte (bits 8, 16, ..., 64) is a parity position and
/// is ignored: it is cleared on construction, so two keys compare equal iff
/// their 56 effective bits match.
class DesKey {
 public:
  static constexpr std::uint64_t kParityMask = 0x0101010101010101ULL;
  static constexpr int kEffectiveBits = 56;

  constexpr DesKey() noexcept = default;
  constexpr explicit DesKey(std::uint64_t raw) noexcept : raw_(raw & ~kParityMask) {}

  /// Packs a 56-bit value into the effective key positions, MSB first.
  [[nodiscard]] static DesKey from_effective_bits(std::uint64_t bits56) noexcept;

  /// The 56 effective bits packed into the low bits of the result.
  [[nodiscard]] std::uint64_t effective_bits() const noexcept;

  /// 64-bit layout with parity positions zero.
  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return raw_; }

  /// Flips effective bit `index` in [0, 56), counted from the MSB.
  [[nodiscard]] DesKey with_effective_bit_flipped(int index) const noexcept;

  friend constexpr bool operator==(DesKey, DesKey) noexcept = default;

 private:
  std::uint64_t raw_ = 0;
};

/// DES (FIPS 46-3) with a precomputed key schedule.
class DesCipher {
 public:
  explicit DesCipher(DesKey key) noexcept;

  [[nodiscard]] Block64 encrypt(Block64 block) const noexcept;
  [[nodiscard]] Block64 decrypt(Block64 block) const noexcept;

  [[nodiscard]] DesKey key() const noexcept { return key_; }

 private:
  DesKey key_;
  std::array<std::uint64_t, 16> subkeys_{};
};

[[nodiscard]] Block64 des_encrypt_block(DesKey key, Block64 block) noexcept;
[[nodiscard]] Block64 des_decrypt_block(DesKey key, Block64 block) noexcept;

}  // namespace cfbnoise

#endif  // CFBNOISE_DES_HPP_
