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

// Desk-scale simulation of the real pipeline (DES-CFB, injected noise,
// decryption, key verification) checked against the analytic models.
//
// Every check is reproducible from (config, seed): all randomness comes from
// counter-based streams keyed by the seed, a per-check tag and the trial or
// frame index. Proportions are compared at 3 standard errors estimated from
// the observed counts.

#ifndef CFBNOISE_MONTE_CARLO_HPP_
#define CFBNOISE_MONTE_CARLO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cfbnoise/attack_model.hpp"
#include "cfbnoise/block.hpp"
#include "cfbnoise/channel_model.hpp"

namespace cfbnoise {

struct ValidationConfig {
  double eta = 0.0125;
  double alpha = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t frames = 10;
  std::uint64_t blocks_per_frame = 10000;
  std::uint64_t trials = 10000;  ///< samples per proportion / histogram check
  Block64 iv{};

  std::uint64_t avalanche_trials = 10000;
  double tv_bound = 0.05;

  /// Trials per candidate for the verification-rate checks.
  int verify_n_c = 3;
  /// Residual threshold for the wrong-key acceptance check, large enough
  /// that P_F is measurable.
  int inflated_tau = 30;

  // Reduced-keyspace attack.
  int reduced_key_bits = 16;
  int reduced_advantage = 6;
  int reduced_n_c = 4;
  int reduced_tau = 17;
  double synthetic_success = 0.8;
  std::uint64_t attack_trials = 10000;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct ValidationCheck {
  std::string name;
  std::string formula;  ///< which model quantity is being tested
  double analytic = 0.0;
  double empirical = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::string criterion;
  bool passed = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  [[nodiscard]] bool all_passed() const noexcept;
  void append(const ValidationReport& other);
  /// Header line plus one tab-separated record per check.
  [[nodiscard]] std::string to_text() const;
};

/// Proportion check: |k/n - analytic| <= 3 se with se = sqrt(p(1-p)/n)
/// from the observed p = k/n, floored at 1/n.
[[nodiscard]] ValidationCheck proportion_check(std::string name, std::string formula,
                                               double analytic, std::uint64_t successes,
                                               std::uint64_t n);

/// DES avalanche rate inside [0.49, 0.51].
[[nodiscard]] ValidationReport validate_avalanche(const ValidationConfig& cfg);

/// Empirical S0..S3 occupancy and transition frequencies against the chain.
[[nodiscard]] ValidationReport validate_state_occupancy(const ValidationConfig& cfg);

/// Histogram of decryption error weights over real DES-CFB frames, restricted
/// to blocks in `state`, against the analytic error law (total variation).
[[nodiscard]] ValidationReport validate_error_weights(const ValidationConfig& cfg,
                                                      MarkovState state);

/// Runs the key test on fresh noisy frames: per-stage success and miss rate
/// with the right key at `params.tau`, acceptance of random wrong keys at
/// cfg.inflated_tau.
[[nodiscard]] ValidationReport validate_verification_rates(const ValidationConfig& cfg,
                                                           const AttackParams& params);

/// Toy-scale exhaustive search over an r-bit key subspace with a synthetic
/// ranking; empirical (P_c, P_e, P_w) against the exact aggregation with
/// 2^(r-a) candidates.
[[nodiscard]] ValidationReport reduced_keyspace_attack(const ValidationConfig& cfg, double eta);

/// Analytic outcome the reduced attack is compared against.
[[nodiscard]] AttackOutcome reduced_keyspace_prediction(const ValidationConfig& cfg, double eta);

/// Every check above at cfg.eta.
[[nodiscard]] ValidationReport run_validation(const ValidationConfig& cfg);

}  // namespace cfbnoise

#endif  // CFBNOISE_MONTE_CARLO_HPP_
