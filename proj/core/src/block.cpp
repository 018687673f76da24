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

#include "cfbnoise/block.hpp"

#include <stdexcept>

namespace cfbnoise {

std::array<std::uint8_t, 8> Block64::to_bytes() const noexcept {
  std::array<std::uint8_t, 8> out{};
  for (int i = 0; i < 8; ++i) {
    out[i] = static_cast<std::uint8_t>(value_ >> (56 - 8 * i));
  }
  return out;
}

Block64 Block64::from_bytes(const std::array<std::uint8_t, 8>& bytes) noexcept {
  std::uint64_t v = 0;
  for (std::uint8_t b : bytes) v = (v << 8) | b;
  return Block64(v);
}

std::string Block64::to_hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) {
    out[i] = kDigits[(value_ >> (60 - 4 * i)) & 0xF];
  }
  return out;
}

Block64 Block64::from_hex(std::string_view hex) {
  if (hex.size() != 16) {
    throw std::invalid_argument("Block64::from_hex: expected 16 hex digits");
  }
  std::uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') {
      d = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      d = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      d = c - 'A' + 10;
    } else {
      throw std::invalid_argument("Block64::from_hex: invalid hex digit");
    }
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return Block64(v);
}

}  // namespace cfbnoise
