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

#include "cfbnoise/verification.hpp"

#include <stdexcept>

namespace cfbnoise {
namespace {

void require_pairs(const CfbTrace& trace, std::size_t start_index, std::size_t count) {
  if (trace.noisy_ciphertexts.size() != trace.plaintexts.size()) {
    throw std::invalid_argument("verification: trace plaintext/ciphertext lengths differ");
  }
  if (start_index > trace.size() || count > trace.size() - start_index) {
    throw std::out_of_range("verification: trace has fewer pairs than requested stages");
  }
}

}  // namespace

int stage_residual_weight(const CfbTrace& trace, const DesCipher& candidate, std::size_t index) {
  const Block64 feedback = index == 0 ? trace.iv : trace.noisy_ciphertexts[index - 1];
  const Block64 hypothesis = trace.plaintexts[index] ^ candidate.encrypt(feedback);
  return hamming_distance(trace.noisy_ciphertexts[index], hypothesis);
}

std::vector<int> stage_residual_weights(const CfbTrace& trace, const DesCipher& candidate,
                                        std::size_t start_index, std::size_t count) {
  require_pairs(trace, start_index, count);
  std::vector<int> weights;
  weights.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    weights.push_back(stage_residual_weight(trace, candidate, start_index + i));
  }
  return weights;
}

bool verify_candidate(const CfbTrace& trace, const DesCipher& candidate,
                      const AttackParams& params, std::size_t start_index) {
  if (params.n_c < 1) throw std::invalid_argument("verify_candidate: n_c must be >= 1");
  const auto stages = static_cast<std::size_t>(params.n_c);
  require_pairs(trace, start_index, stages);
  for (std::size_t i = 0; i < stages; ++i) {
    if (stage_residual_weight(trace, candidate, start_index + i) <= params.tau) return true;
  }
  return false;
}

bool verify_candidate(const CfbTrace& trace, DesKey candidate, const AttackParams& params,
                      std::size_t start_index) {
  return verify_candidate(trace, DesCipher(candidate), params, start_index);
}

}  // namespace cfbnoise
