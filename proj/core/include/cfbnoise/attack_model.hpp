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

// Analytic model of a linear attack on DES-CFB mounted over noisy
// ciphertexts.
//
// In the exhaustive-search phase the attacker tests each of the 2^(56-a)
// highest ranked keys with N_c chained CFB trials and accepts the first key
// for which some trial leaves a residual of Hamming weight <= tau. Noise makes
// her miss the right key (P_m) or accept a wrong one (P_F); both are folded
// into the per-frame outcome probabilities P_c (right key), P_e (no key,
// frame erased) and P_w (wrong key).

#ifndef CFBNOISE_ATTACK_MODEL_HPP_
#define CFBNOISE_ATTACK_MODEL_HPP_

#include <cmath>
#include <cstdint>

namespace cfbnoise {

inline constexpr int kBlockBits = 64;
inline constexpr int kDesKeyBits = 56;

/// The linear approximation driving the ranking phase.
struct LinearApproxSpec {
  /// |p - 1/2| of the noise-free approximation. Default: Matsui's
  /// 16-round DES attack approximation, 1.19 * 2^-21.
  double epsilon = 1.19 * 0x1.0p-21;
  int plaintext_bits = 13;   ///< u
  int ciphertext_bits = 13;  ///< v; only u + v enters the model
  int key_bits = 26;         ///< m

  [[nodiscard]] int data_bits() const noexcept { return plaintext_bits + ciphertext_bits; }
};

/// The attacker's resource limits.
struct AttackConstraints {
  double theta = 0x1.0p48;  ///< DES encryptions available per frame
  double n_max = 0x1.0p46;  ///< plaintext/ciphertext pairs available
  double t_m = 1e-5;        ///< ceiling on the key-missing probability
  double t_f = 1e-5;        ///< ceiling on the single-trial fault probability
  int nc_max = 100;         ///< ceiling on trials per candidate
};

/// The attacker's knobs.
struct AttackParams {
  int n_c = 1;  ///< chained trials per candidate key
  int tau = 0;  ///< accept a trial iff its residual weight <= tau
  int a = 0;    ///< bit advantage; 2^(56-a) keys are tested

  friend bool operator==(const AttackParams&, const AttackParams&) = default;
};

struct MissProbabilities {
  double p_1 = 0.0;  ///< a single trial succeeds for the right key
  double p_m = 0.0;  ///< all N_c trials fail for the right key
};

struct FalseKeyProbabilities {
  double p_2 = 0.0;  ///< a single trial succeeds for a wrong key
  double p_f = 0.0;  ///< some trial succeeds for a wrong key
};

/// Per-frame outcome of the exhaustive search.
struct AttackOutcome {
  double p_c = 0.0;  ///< right key found
  double p_e = 0.0;  ///< no key accepted: frame erased
  double p_w = 0.0;  ///< wrong key accepted
};

/// Full probability ledger for one (eta, params) point.
struct OutcomeProbabilities {
  double p_fault = 0.0;
  double p_1 = 0.0;
  double p_m = 0.0;
  double p_2 = 0.0;
  double p_f = 0.0;
  double p_s = 0.0;
  double p_c = 0.0;
  double p_e = 0.0;
  double p_w = 0.0;

  [[nodiscard]] AttackOutcome outcome() const noexcept { return {p_c, p_e, p_w}; }
};

/// Bit error rate of a wrong-key trial residual: alpha(1-eta) + eta(1-alpha).
[[nodiscard]] double gamma(double alpha, double eta) noexcept;

/// Probability that more than tau of the 64 ciphertext bits are flipped.
[[nodiscard]] double p_fault(double eta, int tau);

/// P_1 = (1-eta)^64 and P_m = (1-P_1)^N_c.
[[nodiscard]] MissProbabilities p_miss(double eta, int n_c);

/// P_2 = P[Binomial(64, gamma) <= tau] and P_F = 1 - (1-P_2)^N_c.
[[nodiscard]] FalseKeyProbabilities p_false(double alpha, double eta, int tau, int n_c);

/// Bias left after noise: 2^(u+v) (1/2 - eta)^(u+v) epsilon.
[[nodiscard]] double noisy_bias(const LinearApproxSpec& approx, double eta) noexcept;

/// Probability that the right key is ranked within the top 2^(56-a):
/// Phi(2 sqrt(N) eps_hat - Phi^{-1}(1 - 2^(-a-1))).
[[nodiscard]] double success_prob_noisy(double n_pairs, const LinearApproxSpec& approx, double eta,
                                        int a);

/// Exact aggregation over a scan of `candidates` keys, highest rank first.
///
///   P_c = P_s (1-P_m) [1 - (1-P_F)^M] / (P_F M)
///   P_e = (1-P_s)(1-P_F)^M + P_s P_m (1-P_F)^(M-1)
///   P_w = 1 - P_c - P_e
[[nodiscard]] AttackOutcome attack_outcomes_over(double p_s, double p_m, double p_f,
                                                 double candidates);

/// attack_outcomes_over with M = 2^(56-a).
[[nodiscard]] AttackOutcome attack_outcomes(double p_s, double p_m, double p_f, int a);

/// Smallest tau in [0, 64] with p_fault(eta, tau) <= t_f (64 if none).
[[nodiscard]] int minimal_tau(double eta, double t_f);

/// Smallest N_c in [1, nc_max] with P_m <= t_m (nc_max if none).
[[nodiscard]] int minimal_trials(double eta, double t_m, int nc_max);

/// ceil(56 - log2(theta / N_c)), the smallest advantage within budget.
[[nodiscard]] int minimal_advantage(double theta, int n_c);

/// Evaluates every probability for fixed params.
[[nodiscard]] OutcomeProbabilities evaluate_attack(double eta, const AttackParams& params,
                                                   const AttackConstraints& constraints,
                                                   const LinearApproxSpec& approx,
                                                   double alpha = 0.5);

struct OptimizedAttack {
  AttackParams params;
  OutcomeProbabilities probabilities;
};

/// Picks tau and N_c as the smallest values meeting their thresholds, then the
/// advantage a in [max(a0, 0), 56] maximizing the exact P_c (smallest a on
/// ties). Uses N = n_max pairs. Throws std::invalid_argument unless
/// 0 <= eta < 0.5.
[[nodiscard]] OptimizedAttack optimize_parameters(double eta, const AttackConstraints& constraints,
                                                  const LinearApproxSpec& approx,
                                                  double alpha = 0.5);

/// Same, with tau and N_c already chosen.
[[nodiscard]] OptimizedAttack optimize_advantage(double eta, int tau, int n_c,
                                                 const AttackConstraints& constraints,
                                                 const LinearApproxSpec& approx,
                                                 double alpha = 0.5);

/// N_c * 2^(56-a) <= theta.
[[nodiscard]] bool within_budget(const AttackParams& params, double theta) noexcept;

}  // namespace cfbnoise

#endif  // CFBNOISE_ATTACK_MODEL_HPP_
