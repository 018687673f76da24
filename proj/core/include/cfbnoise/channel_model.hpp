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

// Block-level model of the noisy CFB link between the legitimate parties.
//
// The decryption error of block i depends on whether the received blocks
// i-1 (cipher input) and i (XORed directly) were hit by noise, which gives a
// four-state Markov chain:
//
//   S0  neither block noisy      error vector is zero
//   S1  only block i noisy       error = the noise itself, conditioned on >= 1 flip
//   S2  only block i-1 noisy     error ~ i.i.d. Bernoulli(alpha) (avalanche)
//   S3  both noisy               avalanche XOR noise, conditioned on >= 1 flip
//
// Capacities assume both receivers know the state and inputs are uniform.

#ifndef CFBNOISE_CHANNEL_MODEL_HPP_
#define CFBNOISE_CHANNEL_MODEL_HPP_

#include <array>
#include <string_view>

#include "cfbnoise/attack_model.hpp"

namespace cfbnoise {

enum class MarkovState { kS0 = 0, kS1 = 1, kS2 = 2, kS3 = 3 };

inline constexpr std::array<MarkovState, 4> kAllStates = {MarkovState::kS0, MarkovState::kS1,
                                                          MarkovState::kS2, MarkovState::kS3};

[[nodiscard]] constexpr MarkovState classify_state(bool previous_noisy,
                                                   bool current_noisy) noexcept {
  if (previous_noisy) return current_noisy ? MarkovState::kS3 : MarkovState::kS2;
  return current_noisy ? MarkovState::kS1 : MarkovState::kS0;
}

[[nodiscard]] std::string_view to_string(MarkovState state) noexcept;

using Matrix4 = std::array<std::array<double, 4>, 4>;
using Vector4 = std::array<double, 4>;

/// Pre-clamp floor for the analytically nonnegative S3 bracket.
inline constexpr double kNegativeRoundoffGuard = -1e-15;

/// Distribution of the Hamming weight of the 64-bit decryption error in one
/// state. The probability of one particular error vector of weight w is
/// probs[w] / C(64, w).
struct ErrorWeightDistribution {
  MarkovState state = MarkovState::kS0;
  std::array<double, 65> probs{};
  double min_preclamp = 0.0;  ///< most negative value seen before clamping

  [[nodiscard]] double per_vector(int weight) const;
  [[nodiscard]] double total() const noexcept;
  [[nodiscard]] double mean_weight() const noexcept;
};

/// q = 1 - (1-eta)^64, the chance a block carries at least one flipped bit.
[[nodiscard]] double q_of_eta(double eta) noexcept;

/// Error-weight law of `state`. At eta = 0 the S1 and S3 laws are their
/// eta -> 0 limits (exactly one noise bit). Throws std::runtime_error if the
/// S3 bracket rounds below kNegativeRoundoffGuard.
[[nodiscard]] ErrorWeightDistribution error_weight_distribution(MarkovState state, double alpha,
                                                                double eta);

/// -sum_w probs[w] log2(probs[w] / C(64,w)).
[[nodiscard]] double entropy_from_weights(const ErrorWeightDistribution& dist);

struct MarkovChainSolution {
  Matrix4 transition{};
  Vector4 steady_state{};   ///< closed form [(1-q)^2, q(1-q), q(1-q), q^2]
  Vector4 solved_steady{};  ///< from the linear system P^t T = P^t, sum P = 1
  double max_deviation = 0.0;
};

/// Transition matrix and stationary vector for block-error probability q.
/// The closed form is checked against a direct linear solve; throws
/// std::logic_error if they differ by more than 1e-12.
[[nodiscard]] MarkovChainSolution transition_and_steady_state(double q);

/// Stationary vector of any 4-state chain with a unique stationary law.
[[nodiscard]] Vector4 solve_stationary(const Matrix4& transition);

/// H(Y | X, S) in bits for S1 or S3, from the closed-form sums over weights.
/// Throws std::invalid_argument for S0 and S2.
[[nodiscard]] double conditional_entropy(MarkovState state, double alpha, double eta);

/// Capacity of one state in bits per channel use.
[[nodiscard]] double state_capacity(MarkovState state, double alpha, double eta);

struct MarkovChannelModel {
  double q = 0.0;
  Matrix4 transition_matrix{};
  Vector4 steady_state{};
  Vector4 state_capacities{};

  /// Steady-state average of the state capacities.
  [[nodiscard]] double average_capacity() const noexcept;
};

[[nodiscard]] MarkovChannelModel make_channel_model(double alpha, double eta);

/// C_B = (1-q)^2 + q(1-q)[C(S1) + 1 - h(alpha)] + q^2 C(S3).
[[nodiscard]] double main_capacity(double alpha, double eta);

/// C_E = P_w (1 - h(gamma)) + P_c C_B.
[[nodiscard]] double eve_capacity(const AttackOutcome& outcome, double alpha, double eta);
[[nodiscard]] double eve_capacity(const AttackOutcome& outcome, double alpha, double eta,
                                  double main_capacity_value);

struct CapacityReport {
  double c_b = 0.0;
  double c_e = 0.0;
  double c_s = 0.0;              ///< C_B - C_E
  double c_s_closed_form = 0.0;  ///< C_B(1-P_c) - (1-P_e-P_c)(1-h(gamma))
  bool degraded = true;          ///< C_E <= C_B held
};

[[nodiscard]] CapacityReport secrecy_capacity(double alpha, double eta,
                                              const AttackOutcome& outcome);

}  // namespace cfbnoise

#endif  // CFBNOISE_CHANNEL_MODEL_HPP_
