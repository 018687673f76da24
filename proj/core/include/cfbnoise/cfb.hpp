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

// 64-bit cipher feedback mode: C[n] = P[n] ^ E(C[n-1]), C[-1] = IV.

#ifndef CFBNOISE_CFB_HPP_
#define CFBNOISE_CFB_HPP_

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfbnoise/block.hpp"
#include "cfbnoise/des.hpp"
#include "cfbnoise/noise.hpp"

namespace cfbnoise {

template <typename C>
concept BlockEncryptor = requires(const C& cipher, Block64 block) {
  { cipher.encrypt(block) } -> std::same_as<Block64>;
};

template <BlockEncryptor Cipher>
[[nodiscard]] std::vector<Block64> cfb_encrypt(const Cipher& cipher, Block64 iv,
                                               std::span<const Block64> plaintexts) {
  if (plaintexts.empty()) throw std::invalid_argument("cfb_encrypt: no plaintext blocks");
  std::vector<Block64> out;
  out.reserve(plaintexts.size());
  Block64 feedback = iv;
  for (Block64 p : plaintexts) {
    feedback = p ^ cipher.encrypt(feedback);
    out.push_back(feedback);
  }
  return out;
}

/// Decrypts a possibly noisy ciphertext chain. The keystream for block i is
/// derived from the received block i-1, so a corrupted block garbles its own
/// plaintext bitwise and the next one through the cipher, then the chain
/// resynchronizes.
template <BlockEncryptor Cipher>
[[nodiscard]] std::vector<Block64> cfb_decrypt(const Cipher& cipher, Block64 iv,
                                               std::span<const Block64> received) {
  if (received.empty()) throw std::invalid_argument("cfb_decrypt: no ciphertext blocks");
  std::vector<Block64> out;
  out.reserve(received.size());
  Block64 feedback = iv;
  for (Block64 c : received) {
    out.push_back(c ^ cipher.encrypt(feedback));
    feedback = c;
  }
  return out;
}

[[nodiscard]] std::vector<Block64> cfb_encrypt(DesKey key, Block64 iv,
                                               std::span<const Block64> plaintexts);
[[nodiscard]] std::vector<Block64> cfb_decrypt(DesKey key, Block64 iv,
                                               std::span<const Block64> received);

/// One frame's worth of the encrypt -> inject noise pipeline.
struct CfbTrace {
  Block64 iv;
  std::vector<Block64> plaintexts;
  std::vector<Block64> ciphertexts;
  std::vector<Block64> noisy_ciphertexts;
  std::vector<Block64> noise_blocks;

  [[nodiscard]] std::size_t size() const noexcept { return plaintexts.size(); }
};

[[nodiscard]] CfbTrace make_cfb_trace(const DesCipher& cipher, Block64 iv,
                                      std::vector<Block64> plaintexts, const NoiseSpec& noise,
                                      std::uint64_t frame_index = 0);

/// Uniformly random blocks from the plaintext stream of `seed`.
[[nodiscard]] std::vector<Block64> random_blocks(std::uint64_t seed, std::uint64_t frame_index,
                                                 std::size_t count);

}  // namespace cfbnoise

#endif  // CFBNOISE_CFB_HPP_
