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

// Table-driven DES. Every fixed bit permutation is compiled into per-byte
// lookup tables, and each S-box is fused with the P permutation.

#include "cfbnoise/des.hpp"

#include <cstddef>

namespace cfbnoise {
namespace {

using u64 = std::uint64_t;

// Bit permutation on a value of InBits bits (right-aligned), described by a
// FIPS-style table: output bit i (1-based, MSB first) takes input bit
// table[i-1]. InBits must be a multiple of 8.
template <int InBits, int OutBits>
struct BytePermutation {
  static constexpr int kInBytes = InBits / 8;
  std::array<std::array<u64, 256>, kInBytes> tables{};

  constexpr explicit BytePermutation(const std::array<int, OutBits>& map) {
    for (int i = 0; i < OutBits; ++i) {
      const int src = map[i] - 1;  // 0-based from MSB
      const int byte = src / 8;
      const int bit_in_byte = 7 - (src % 8);
      const u64 out_bit = u64{1} << (OutBits - 1 - i);
      for (int b = 0; b < 256; ++b) {
        if ((b >> bit_in_byte) & 1) tables[byte][b] |= out_bit;
      }
    }
  }

  constexpr u64 operator()(u64 v) const noexcept {
    u64 out = 0;
    for (int j = 0; j < kInBytes; ++j) {
      out |= tables[j][(v >> (InBits - 8 * (j + 1))) & 0xFF];
    }
    return out;
  }
};

constexpr std::array<int, 64> kInitialPermutation = {
    58, 50, 42, 34, 26, 18, 10, 2, 60, 52, 44, 36, 28, 20, 12, 4,
    62, 54, 46, 38, 30, 22, 14, 6, 64, 56, 48, 40, 32, 24, 16, 8,
    57, 49, 41, 33, 25, 17, 9,  1, 59, 51, 43, 35, 27, 19, 11, 3,
    61, 53, 45, 37, 29, 21, 13, 5, 63, 55, 47, 39, 31, 23, 15, 7};

constexpr std::array<int, 64> kFinalPermutation = {
    40, 8, 48, 16, 56, 24, 64, 32, 39, 7, 47, 15, 55, 23, 63, 31,
    38, 6, 46, 14, 54, 22, 62, 30, 37, 5, 45, 13, 53, 21, 61, 29,
    36, 4, 44, 12, 52, 20, 60, 28, 35, 3, 43, 11, 51, 19, 59, 27,
    34, 2, 42, 10, 50, 18, 58, 26, 33, 1, 41, 9,  49, 17, 57, 25};

constexpr std::array<int, 48> kExpansion = {
    32, 1,  2,  3,  4,  5,  4,  5,  6,  7,  8,  9,  8,  9,  10, 11,
    12, 13, 12, 13, 14, 15, 16, 17, 16, 17, 18, 19, 20, 21, 20, 21,
    22, 23, 24, 25, 24, 25, 26, 27, 28, 29, 28, 29, 30, 31, 32, 1};

constexpr std::array<int, 32> kRoundPermutation = {
    16, 7, 20, 21, 29, 12, 28, 17, 1,  15, 23, 26, 5,  18, 31, 10,
    2,  8, 24, 14, 32, 27, 3,  9,  19, 13, 30, 6,  22, 11, 4,  25};

constexpr std::array<int, 56> kPermutedChoice1 = {
    57, 49, 41, 33, 25, 17, 9,  1,  58, 50, 42, 34, 26, 18,
    10, 2,  59, 51, 43, 35, 27, 19, 11, 3,  60, 52, 44, 36,
    63, 55, 47, 39, 31, 23, 15, 7,  62, 54, 46, 38, 30, 22,
    14, 6,  61, 53, 45, 37, 29, 21, 13, 5,  28, 20, 12, 4};

constexpr std::array<int, 48> kPermutedChoice2 = {
    14, 17, 11, 24, 1,  5,  3,  28, 15, 6,  21, 10,
    23, 19, 12, 4,  26, 8,  16, 7,  27, 20, 13, 2,
    41, 52, 31, 37, 47, 55, 30, 40, 51, 45, 33, 48,
    44, 49, 39, 56, 34, 53, 46, 42, 50, 36, 29, 32};

constexpr std::array<int, 16> kKeyShifts = {1, 1, 2, 2, 2, 2, 2, 2,
                                            1, 2, 2, 2, 2, 2, 2, 1};

constexpr std::uint8_t kSBoxes[8][4][16] = {
    {{14, 4, 13, 1, 2, 15, 11, 8, 3, 10, 6, 12, 5, 9, 0, 7},
     {0, 15, 7, 4, 14, 2, 13, 1, 10, 6, 12, 11, 9, 5, 3, 8},
     {4, 1, 14, 8, 13, 6, 2, 11, 15, 12, 9, 7, 3, 10, 5, 0},
     {15, 12, 8, 2, 4, 9, 1, 7, 5, 11, 3, 14, 10, 0, 6, 13}},
    {{15, 1, 8, 14, 6, 11, 3, 4, 9, 7, 2, 13, 12, 0, 5, 10},
     {3, 13, 4, 7, 15, 2, 8, 14, 12, 0, 1, 10, 6, 9, 11, 5},
     {0, 14, 7, 11, 10, 4, 13, 1, 5, 8, 12, 6, 9, 3, 2, 15},
     {13, 8, 10, 1, 3, 15, 4, 2, 11, 6, 7, 12, 0, 5, 14, 9}},
    {{10, 0, 9, 14, 6, 3, 15, 5, 1, 13, 12, 7, 11, 4, 2, 8},
     {13, 7, 0, 9, 3, 4, 6, 10, 2, 8, 5, 14, 12, 11, 15, 1},
     {13, 6, 4, 9, 8, 15, 3, 0, 11, 1, 2, 12, 5, 10, 14, 7},
     {1, 10, 13, 0, 6, 9, 8, 7, 4, 15, 14, 3, 11, 5, 2, 12}},
    {{7, 13, 14, 3, 0, 6, 9, 10, 1, 2, 8, 5, 11, 12, 4, 15},
     {13, 8, 11, 5, 6, 15, 0, 3, 4, 7, 2, 12, 1, 10, 14, 9},
     {10, 6, 9, 0, 12, 11, 7, 13, 15, 1, 3, 14, 5, 2, 8, 4},
     {3, 15, 0, 6, 10, 1, 13, 8, 9, 4, 5, 11, 12, 7, 2, 14}},
    {{2, 12, 4, 1, 7, 10, 11, 6, 8, 5, 3, 15, 13, 0, 14, 9},
     {14, 11, 2, 12, 4, 7, 13, 1, 5, 0, 15, 10, 3, 9, 8, 6},
     {4, 2, 1, 11, 10, 13, 7, 8, 15, 9, 12, 5, 6, 3, 0, 14},
     {11, 8, 12, 7, 1, 14, 2, 13, 6, 15, 0, 9, 10, 4, 5, 3}},
    {{12, 1, 10, 15, 9, 2, 6, 8, 0, 13, 3, 4, 14, 7, 5, 11},
     {10, 15, 4, 2, 7, 12, 9, 5, 6, 1, 13, 14, 0, 11, 3, 8},
     {9, 14, 15, 5, 2, 8, 12, 3, 7, 0, 4, 10, 1, 13, 11, 6},
     {4, 3, 2, 12, 9, 5, 15, 10, 11, 14, 1, 7, 6, 0, 8, 13}},
    {{4, 11, 2, 14, 15, 0, 8, 13, 3, 12, 9, 7, 5, 10, 6, 1},
     {13, 0, 11, 7, 4, 9, 1, 10, 14, 3, 5, 12, 2, 15, 8, 6},
     {1, 4, 11, 13, 12, 3, 7, 14, 10, 15, 6, 8, 0, 5, 9, 2},
     {6, 11, 13, 8, 1, 4, 10, 7, 9, 5, 0, 15, 14, 2, 3, 12}},
    {{13, 2, 8, 4, 6, 15, 11, 1, 10, 9, 3, 14, 5, 0, 12, 7},
     {1, 15, 13, 8, 10, 3, 7, 4, 12, 5, 6, 11, 0, 14, 9, 2},
     {7, 11, 4, 1, 9, 12, 14, 2, 0, 6, 10, 13, 15, 3, 5, 8},
     {2, 1, 14, 7, 4, 10, 8, 13, 15, 12, 9, 0, 3, 5, 6, 11}}};

constexpr BytePermutation<64, 64> kIP(kInitialPermutation);
constexpr BytePermutation<64, 64> kFP(kFinalPermutation);
constexpr BytePermutation<32, 48> kE(kExpansion);
constexpr BytePermutation<64, 56> kPC1(kPermutedChoice1);
constexpr BytePermutation<56, 48> kPC2(kPermutedChoice2);

// S-box j followed by P, indexed by the raw 6-bit S-box input.
struct SpTables {
  std::array<std::array<std::uint32_t, 64>, 8> sp{};

  constexpr SpTables() {
    constexpr BytePermutation<32, 32> p(kRoundPermutation);
    for (int j = 0; j < 8; ++j) {
      for (int six = 0; six < 64; ++six) {
        const int row = ((six >> 4) & 2) | (six & 1);
        const int col = (six >> 1) & 0xF;
        const u64 s = u64{kSBoxes[j][row][col]} << (28 - 4 * j);
        sp[j][six] = static_cast<std::uint32_t>(p(s));
      }
    }
  }
};

constexpr SpTables kSp;

inline std::uint32_t feistel(std::uint32_t r, u64 subkey) noexcept {
  const u64 x = kE(r) ^ subkey;
  std::uint32_t out = 0;
  for (int j = 0; j < 8; ++j) {
    out |= kSp.sp[j][(x >> (42 - 6 * j)) & 0x3F];
  }
  return out;
}

inline std::uint32_t rotl28(std::uint32_t v, int n) noexcept {
  return ((v << n) | (v >> (28 - n))) & 0x0FFFFFFFu;
}

template <typename SubkeyOrder>
u64 run_rounds(u64 block, const std::array<u64, 16>& subkeys, SubkeyOrder order) noexcept {
  const u64 permuted = kIP(block);
  auto left = static_cast<std::uint32_t>(permuted >> 32);
  auto right = static_cast<std::uint32_t>(permuted);
  for (int round = 0; round < 16; ++round) {
    const std::uint32_t next = left ^ feistel(right, subkeys[order(round)]);
    left = right;
    right = next;
  }
  return kFP((u64{right} << 32) | left);
}

}  // namespace

DesKey DesKey::from_effective_bits(std::uint64_t bits56) noexcept {
  std::uint64_t raw = 0;
  for (int byte = 0; byte < 8; ++byte) {
    const std::uint64_t seven = (bits56 >> (49 - 7 * byte)) & 0x7F;
    raw |= (seven << 1) << (56 - 8 * byte);
  }
  return DesKey(raw);
}

std::uint64_t DesKey::effective_bits() const noexcept {
  std::uint64_t bits = 0;
  for (int byte = 0; byte < 8; ++byte) {
    bits = (bits << 7) | ((raw_ >> (57 - 8 * byte)) & 0x7F);
  }
  return bits;
}

DesKey DesKey::with_effective_bit_flipped(int index) const noexcept {
  return from_effective_bits(effective_bits() ^ (std::uint64_t{1} << (kEffectiveBits - 1 - index)));
}

DesCipher::DesCipher(DesKey key) noexcept : key_(key) {
  const u64 cd = kPC1(key.value());
  auto c = static_cast<std::uint32_t>(cd >> 28);
  auto d = static_cast<std::uint32_t>(cd & 0x0FFFFFFFu);
  for (std::size_t round = 0; round < 16; ++round) {
    c = rotl28(c, kKeyShifts[round]);
    d = rotl28(d, kKeyShifts[round]);
    subkeys_[round] = kPC2((u64{c} << 28) | d);
  }
}

Block64 DesCipher::encrypt(Block64 block) const noexcept {
  return Block64(run_rounds(block.value(), subkeys_, [](int r) { return r; }));
}

Block64 DesCipher::decrypt(Block64 block) const noexcept {
  return Block64(run_rounds(block.value(), subkeys_, [](int r) { return 15 - r; }));
}

Block64 des_encrypt_block(DesKey key, Block64 block) noexcept {
  return DesCipher(key).encrypt(block);
}

Block64 des_decrypt_block(DesKey key, Block64 block) noexcept {
  return DesCipher(key).decrypt(block);
}

}  // namespace cfbnoise
