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

#include "cfbnoise/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "cfbnoise/numerics.hpp"

namespace cfbnoise {
namespace {

constexpr int kN = kBlockBits;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log of p^w (1-p)^(64-w), with 0 * log 0 = 0.
double log_vector_probability(int w, double p) {
  double out = 0.0;
  if (w > 0) out += w * std::log(p);
  if (kN - w > 0) out += (kN - w) * std::log1p(-p);
  return out;
}

const std::array<double, 65>& exact_choose_64() {
  static const std::array<double, 65> table = [] {
    std::array<double, 65> t{};
    __extension__ typedef unsigned __int128 u128;
    u128 c = 1;
    for (int k = 0; k <= kN; ++k) {
      t[k] = static_cast<double>(c);
      c = c * static_cast<unsigned>(kN - k) / static_cast<unsigned>(k + 1);
    }
    return t;
  }();
  return table;
}

// log per-vector probability of a weight-w error in S1 or S3, eta > 0.
// Records the S3 bracket before clamping into `min_preclamp`.
double log_state_vector_probability(MarkovState state, int w, double alpha, double eta,
                                    double& min_preclamp) {
  const double log_q = std::log(q_of_eta(eta));
  if (state == MarkovState::kS1) {
    return w == 0 ? kNegInf : log_vector_probability(w, eta) - log_q;
  }
  // S3: [gamma^w (1-gamma)^(64-w) - alpha^w (1-alpha)^(64-w) (1-q)] / q.
  const double la = log_vector_probability(w, gamma(alpha, eta));
  const double lb = log_vector_probability(w, alpha) + kN * std::log1p(-eta);
  const double log_c = numerics::log_choose(kN, w);
  if (la == kNegInf) {
    if (lb != kNegInf) min_preclamp = std::min(min_preclamp, -std::exp(log_c + lb - log_q));
    return kNegInf;
  }
  const double d = lb - la;
  if (d >= 0.0) {
    min_preclamp = std::min(min_preclamp, std::exp(log_c + la - log_q) * -std::expm1(d));
    return kNegInf;
  }
  return la + std::log(-std::expm1(d)) - log_q;
}

void check_preclamp(double min_preclamp) {
  if (min_preclamp < kNegativeRoundoffGuard) {
    throw std::runtime_error("S3 error law: bracket rounded to " + std::to_string(min_preclamp) +
                             ", below the round-off guard");
  }
}

// Limit laws at eta = 0: the noise is a single uniformly placed bit flip.
ErrorWeightDistribution zero_noise_limit(MarkovState state, double alpha) {
  ErrorWeightDistribution dist;
  dist.state = state;
  if (state == MarkovState::kS1) {
    dist.probs[1] = 1.0;
    return dist;
  }
  // S3: Binomial(64, alpha) avalanche weight moved up or down by one.
  for (int w = 0; w <= kN; ++w) {
    double p = 0.0;
    if (w >= 1) p += std::exp(numerics::log_binomial_pmf(kN, w - 1, alpha)) * (kN - w + 1) / kN;
    if (w + 1 <= kN) p += std::exp(numerics::log_binomial_pmf(kN, w + 1, alpha)) * (w + 1) / kN;
    dist.probs[w] = p;
  }
  return dist;
}

void require_entropy_state(MarkovState state) {
  if (state != MarkovState::kS1 && state != MarkovState::kS3) {
    throw std::invalid_argument("conditional_entropy: only S1 and S3 have vector-valued errors");
  }
}

}  // namespace

std::string_view to_string(MarkovState state) noexcept {
  switch (state) {
    case MarkovState::kS0: return "S0";
    case MarkovState::kS1: return "S1";
    case MarkovState::kS2: return "S2";
    case MarkovState::kS3: return "S3";
  }
  return "S?";
}

double ErrorWeightDistribution::per_vector(int weight) const {
  return probs.at(static_cast<std::size_t>(weight)) / exact_choose_64()[weight];
}

double ErrorWeightDistribution::total() const noexcept {
  double sum = 0.0;
  for (double p : probs) sum += p;
  return sum;
}

double ErrorWeightDistribution::mean_weight() const noexcept {
  double sum = 0.0;
  for (int w = 0; w <= kN; ++w) sum += w * probs[w];
  return sum;
}

double q_of_eta(double eta) noexcept { return -std::expm1(kN * std::log1p(-eta)); }

ErrorWeightDistribution error_weight_distribution(MarkovState state, double alpha, double eta) {
  ErrorWeightDistribution dist;
  dist.state = state;
  switch (state) {
    case MarkovState::kS0:
      dist.probs[0] = 1.0;
      return dist;
    case MarkovState::kS2:
      for (int w = 0; w <= kN; ++w) {
        dist.probs[w] = std::exp(numerics::log_binomial_pmf(kN, w, alpha));
      }
      return dist;
    case MarkovState::kS1:
    case MarkovState::kS3:
      break;
  }
  if (eta <= 0.0) return zero_noise_limit(state, alpha);
  double min_preclamp = 0.0;
  for (int w = 0; w <= kN; ++w) {
    const double log_pv = log_state_vector_probability(state, w, alpha, eta, min_preclamp);
    dist.probs[w] = log_pv == kNegInf ? 0.0 : std::exp(numerics::log_choose(kN, w) + log_pv);
  }
  check_preclamp(min_preclamp);
  dist.min_preclamp = min_preclamp;
  return dist;
}

double entropy_from_weights(const ErrorWeightDistribution& dist) {
  double h = 0.0;
  for (int w = 0; w <= kN; ++w) {
    const double p = dist.probs[w];
    if (p > 0.0) h -= p * std::log2(p / exact_choose_64()[w]);
  }
  return h;
}

Vector4 solve_stationary(const Matrix4& transition) {
  // Rows 0..2 of (T^t - I) p = 0, row 3 replaced by sum(p) = 1.
  std::array<std::array<double, 5>, 4> a{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a[i][j] = transition[j][i] - (i == j ? 1.0 : 0.0);
    }
  }
  for (int j = 0; j < 4; ++j) a[3][j] = 1.0;
  a[3][4] = 1.0;

  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) throw std::logic_error("solve_stationary: singular system");
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Vector4 p{};
  for (int i = 0; i < 4; ++i) p[i] = a[i][4] / a[i][i];
  return p;
}

MarkovChainSolution transition_and_steady_state(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
  MarkovChainSolution out;
  const double r = 1.0 - q;
  // The next state depends only on whether the current block is noisy.
  out.transition = {{{r, q, 0.0, 0.0}, {0.0, 0.0, r, q}, {r, q, 0.0, 0.0}, {0.0, 0.0, r, q}}};
  out.steady_state = {r * r, q * r, q * r, q * q};
  out.solved_steady = solve_stationary(out.transition);
  for (int i = 0; i < 4; ++i) {
    out.max_deviation =
        std::max(out.max_deviation, std::abs(out.steady_state[i] - out.solved_steady[i]));
  }
  if (out.max_deviation > 1e-12) {
    throw std::logic_error("steady state closed form disagrees with the linear solve");
  }
  return out;
}

double conditional_entropy(MarkovState state, double alpha, double eta) {
  require_entropy_state(state);
  if (eta <= 0.0) return entropy_from_weights(zero_noise_limit(state, alpha));
  double min_preclamp = 0.0;
  double h = 0.0;
  for (int w = 0; w <= kN; ++w) {
    const double log_pv = log_state_vector_probability(state, w, alpha, eta, min_preclamp);
    if (log_pv == kNegInf) continue;
    h += std::exp(numerics::log_choose(kN, w) + log_pv) * -log_pv;
  }
  check_preclamp(min_preclamp);
  return h / std::numbers::ln2;
}

double state_capacity(MarkovState state, double alpha, double eta) {
  switch (state) {
    case MarkovState::kS0: return 1.0;
    case MarkovState::kS2: return 1.0 - numerics::binary_entropy(alpha);
    case MarkovState::kS1:
    case MarkovState::kS3:
      // Uniform inputs give uniform outputs, so H(Y|S) = 64.
      return (kN - conditional_entropy(state, alpha, eta)) / kN;
  }
  return 0.0;
}

double MarkovChannelModel::average_capacity() const noexcept {
  double c = 0.0;
  for (int i = 0; i < 4; ++i) c += steady_state[i] * state_capacities[i];
  return c;
}

MarkovChannelModel make_channel_model(double alpha, double eta) {
  MarkovChannelModel model;
  model.q = q_of_eta(eta);
  auto chain = transition_and_steady_state(model.q);
  model.transition_matrix = chain.transition;
  model.steady_state = chain.steady_state;
  for (MarkovState s : kAllStates) {
    model.state_capacities[static_cast<int>(s)] = state_capacity(s, alpha, eta);
  }
  return model;
}

double main_capacity(double alpha, double eta) {
  const double q = q_of_eta(eta);
  const double c1 = state_capacity(MarkovState::kS1, alpha, eta);
  const double c3 = state_capacity(MarkovState::kS3, alpha, eta);
  return (1.0 - q) * (1.0 - q) + q * (1.0 - q) * (c1 + 1.0 - numerics::binary_entropy(alpha)) +
         q * q * c3;
}

double eve_capacity(const AttackOutcome& outcome, double alpha, double eta,
                    double main_capacity_value) {
  const double wrong_key_capacity = 1.0 - numerics::binary_entropy(gamma(alpha, eta));
  return outcome.p_w * wrong_key_capacity + outcome.p_c * main_capacity_value;
}

double eve_capacity(const AttackOutcome& outcome, double alpha, double eta) {
  return eve_capacity(outcome, alpha, eta, main_capacity(alpha, eta));
}

CapacityReport secrecy_capacity(double alpha, double eta, const AttackOutcome& outcome) {
  CapacityReport report;
  report.c_b = main_capacity(alpha, eta);
  report.c_e = eve_capacity(outcome, alpha, eta, report.c_b);
  report.c_s = report.c_b - report.c_e;
  const double wrong_key_capacity = 1.0 - numerics::binary_entropy(gamma(alpha, eta));
  report.c_s_closed_form = report.c_b * (1.0 - outcome.p_c) -
                           (1.0 - outcome.p_e - outcome.p_c) * wrong_key_capacity;
  report.degraded = report.c_e <= report.c_b;
  return report;
}

}  // namespace cfbnoise
