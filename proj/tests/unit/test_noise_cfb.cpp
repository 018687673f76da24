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
#include <openssl/des.h>

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "cfbnoise/cfb.hpp"
#include "cfbnoise/noise.hpp"

using namespace cfbnoise;

namespace {

std::vector<Block64> openssl_cfb64(std::uint64_t key, Block64 iv, const std::vector<Block64>& in) {
  DES_cblock k;
  DES_key_schedule ks;
  std::memcpy(k, Block64(key).to_bytes().data(), 8);
  DES_set_key_unchecked(&k, &ks);
  std::vector<unsigned char> bytes;
  for (auto b : in) {
    const auto a = b.to_bytes();
    bytes.insert(bytes.end(), a.begin(), a.end());
  }
  std::vector<unsigned char> out(bytes.size());
  DES_cblock ivec;
  std::memcpy(ivec, iv.to_bytes().data(), 8);
  int num = 0;
  DES_cfb64_encrypt(bytes.data(), out.data(), static_cast<long>(bytes.size()), &ks, &ivec, &num,
                    DES_ENCRYPT);
  std::vector<Block64> blocks;
  for (std::size_t i = 0; i < out.size(); i += 8) {
    std::array<std::uint8_t, 8> a{};
    std::memcpy(a.data(), out.data() + i, 8);
    blocks.push_back(Block64::from_bytes(a));
  }
  return blocks;
}

}  // namespace

TEST_CASE("counter rng is deterministic and stream separated") {
  CounterRng a(1, 2, 3), b(1, 2, 3), c(1, 2, 4);
  for (int i = 0; i < 10; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
  CounterRng r(5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("below is uniform") {
  CounterRng r(11);
  std::array<int, 6> counts{};
  const int n = 60000;
  for (int i = 0; i < n; ++i) ++counts[r.below(6)];
  for (int c : counts) CHECK(std::abs(c - n / 6) < 4 * std::sqrt(n / 6.0));
}

TEST_CASE("noise bit frequency matches eta") {
  for (double eta : {0.001, 0.0125, 0.1, 0.5}) {
    const NoiseSpec spec{eta, 99};
    std::uint64_t flips = 0;
    const std::uint64_t blocks = 20000;
    for (std::uint64_t i = 0; i < blocks; ++i) flips += noise_block(spec, 0, i).weight();
    const double n = 64.0 * blocks;
    const double p = flips / n;
    CHECK(std::abs(p - eta) <= 4 * std::sqrt(eta * (1 - eta) / n));
  }
}

TEST_CASE("noise is reproducible and zero at eta zero") {
  const NoiseSpec spec{0.05, 3};
  CHECK(noise_block(spec, 4, 5) == noise_block(spec, 4, 5));
  CHECK(noise_block(spec, 4, 5) != noise_block(spec, 5, 4));
  CHECK(noise_block({0.0, 3}, 0, 0) == Block64{});
  CHECK(noise_block({0.5, 3}, 0, 0) != Block64{});
  const std::vector<Block64> blocks(50, Block64(0xFFFF));
  const auto noisy = apply_noise(blocks, {0.0, 1});
  CHECK(noisy.noisy == blocks);
  CHECK_THROWS_AS((void)apply_noise(blocks, {0.6, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)apply_noise(blocks, {-0.1, 1}), std::invalid_argument);
  const auto x = apply_noise(blocks, {0.2, 8}, 3);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    CHECK((x.noisy[i] ^ x.noise[i]) == blocks[i]);
    CHECK(x.noise[i] == noise_block({0.2, 8}, 3, i));
  }
}

TEST_CASE("CFB-64 matches OpenSSL and round trips") {
  const std::uint64_t key = 0x133457799BBCDFF1ULL;
  const Block64 iv(0x1234567890ABCDEFULL);
  const auto plain = random_blocks(17, 0, 40);
  const auto cipher = cfb_encrypt(DesKey(key), iv, plain);
  CHECK(cipher == openssl_cfb64(key, iv, plain));
  CHECK(cfb_decrypt(DesKey(key), iv, cipher) == plain);
  CHECK_THROWS_AS((void)cfb_encrypt(DesKey(key), iv, std::vector<Block64>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)cfb_decrypt(DesKey(key), iv, std::vector<Block64>{}),
                  std::invalid_argument);
}

TEST_CASE("a corrupted ciphertext block damages exactly two plaintext blocks") {
  const DesCipher des{DesKey(0x0E329232EA6D0D73ULL)};
  const Block64 iv(0);
  const auto plain = random_blocks(3, 0, 10);
  auto received = cfb_encrypt(des, iv, plain);
  const Block64 flip = Block64(0).with_bit_flipped(9);
  received[4] ^= flip;
  const auto out = cfb_decrypt(des, iv, received);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == 4) {
      CHECK((out[i] ^ plain[i]) == flip);
    } else if (i == 5) {
      CHECK((out[i] ^ plain[i]).weight() > 8);
    } else {
      CHECK(out[i] == plain[i]);
    }
  }
}

TEST_CASE("trace bookkeeping") {
  const DesCipher des{DesKey(77)};
  const auto trace = make_cfb_trace(des, Block64(9), random_blocks(1, 2, 30), {0.05, 4}, 2);
  REQUIRE(trace.size() == 30);
  CHECK(trace.ciphertexts == cfb_encrypt(des, Block64(9), trace.plaintexts));
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK((trace.ciphertexts[i] ^ trace.noise_blocks[i]) == trace.noisy_ciphertexts[i]);
  }
  CHECK(random_blocks(1, 2, 30) == trace.plaintexts);
  CHECK(random_blocks(1, 3, 30) != trace.plaintexts);
}
