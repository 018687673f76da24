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

#ifndef CFBNOISE_VERIFICATION_HPP_
#define CFBNOISE_VERIFICATION_HPP_

#include <cstddef>
#include <vector>

#include "cfbnoise/attack_model.hpp"
#include "cfbnoise/cfb.hpp"
#include "cfbnoise/des.hpp"

namespace cfbnoise {

/// Residual weight HW(C^_i ^ (P_i ^ E(C^_{i-1}))) of one chained CFB stage.
/// Stage 0 feeds from the (public, noise-free) IV.
[[nodiscard]] int stage_residual_weight(const CfbTrace& trace, const DesCipher& candidate,
                                        std::size_t index);

/// Residual weights for `count` consecutive stages starting at `start_index`.
/// Throws std::out_of_range if the trace is too short.
[[nodiscard]] std::vector<int> stage_residual_weights(const CfbTrace& trace,
                                                      const DesCipher& candidate,
                                                      std::size_t start_index, std::size_t count);

/// The key test used in the exhaustive-search phase: run N_c chained stages
/// from `start_index` and accept iff some residual weight is <= tau. Stops at
/// the first successful stage. Throws std::out_of_range if fewer than N_c
/// pairs follow `start_index`.
[[nodiscard]] bool verify_candidate(const CfbTrace& trace, const DesCipher& candidate,
                                    const AttackParams& params, std::size_t start_index);

[[nodiscard]] bool verify_candidate(const CfbTrace& trace, DesKey candidate,
                                    const AttackParams& params, std::size_t start_index);

}  // namespace cfbnoise

#endif  // CFBNOISE_VERIFICATION_HPP_
