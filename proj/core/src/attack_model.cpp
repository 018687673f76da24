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

#include "cfbnoise/attack_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cfbnoise/numerics.hpp"

namespace cfbnoise {
namespace {

void require_tau(int tau) {
  if (tau < 0 || tau > kBlockBits) {
    throw std::invalid_argument("tau must lie in [0, 64], got " + std::to_string(tau));
  }
}

void require_trials(int n_c) {
  if (n_c < 1) throw std::invalid_argument("n_c must be >= 1, got " + std::to_string(n_c));
}

void require_advantage(int a) {
  if (a < 0 || a > kDesKeyBits) {
    throw std::invalid_argument("advantage a must lie in [0, 56], got " + std::to_string(a));
  }
}

// P[a 64-bit block carries at least one error].
double block_error_probability(double eta) {
  return -std::expm1(kBlockBits * std::log1p(-eta));
}

}  // namespace

double gamma(double alpha, double eta) noexcept {
  return alpha * (1.0 - eta) + eta * (1.0 - alpha);
}

double p_fault(double eta, int tau) {
  require_tau(tau);
  return numerics::binomial_upper_tail(kBlockBits, tau, eta);
}

MissProbabilities p_miss(double eta, int n_c) {
  require_trials(n_c);
  MissProbabilities out;
  const double q = block_error_probability(eta);
  out.p_1 = std::exp(kBlockBits * std::log1p(-eta));
  out.p_m = q <= 0.0 ? 0.0 : std::exp(n_c * std::log(q));
  return out;
}

FalseKeyProbabilities p_false(double alpha, double eta, int tau, int n_c) {
  require_tau(tau);
  require_trials(n_c);
  FalseKeyProbabilities out;
  out.p_2 = numerics::binomial_cdf(kBlockBits, tau, gamma(alpha, eta));
  out.p_f = -std::expm1(n_c * std::log1p(-out.p_2));
  return out;
}

double noisy_bias(const LinearApproxSpec& approx, double eta) noexcept {
  const int uv = approx.data_bits();
  return std::exp2(uv) * std::pow(0.5 - eta, uv) * approx.epsilon;
}

double success_prob_noisy(double n_pairs, const LinearApproxSpec& approx, double eta, int a) {
  if (!(n_pairs >= 1.0)) throw std::invalid_argument("n_pairs must be >= 1");
  require_advantage(a);
  const double threshold = numerics::normal_upper_quantile(std::exp2(-a - 1));
  return numerics::normal_cdf(2.0 * std::sqrt(n_pairs) * noisy_bias(approx, eta) - threshold);
}

AttackOutcome attack_outcomes_over(double p_s, double p_m, double p_f, double candidates) {
  // (1-P_F)^M and (1-P_F)^(M-1) through log1p; P_F = 1 gives log -inf.
  const double log_keep = std::log1p(-p_f);
  const double keep_all = std::exp(candidates * log_keep);
  const double keep_others = candidates <= 1.0 ? 1.0 : std::exp((candidates - 1.0) * log_keep);
  const double scan_factor =
      p_f <= 0.0 ? 1.0 : -std::expm1(candidates * log_keep) / (p_f * candidates);

  AttackOutcome out;
  out.p_c = p_s * (1.0 - p_m) * scan_factor;
  out.p_e = (1.0 - p_s) * keep_all + p_s * p_m * keep_others;
  out.p_w = std::max(0.0, (1.0 - out.p_c) - out.p_e);
  return out;
}

AttackOutcome attack_outcomes(double p_s, double p_m, double p_f, int a) {
  require_advantage(a);
  return attack_outcomes_over(p_s, p_m, p_f, std::exp2(kDesKeyBits - a));
}

int minimal_tau(double eta, double t_f) {
  int tau = 0;
  while (tau < kBlockBits && p_fault(eta, tau) > t_f) ++tau;
  return tau;
}

int minimal_trials(double eta, double t_m, int nc_max) {
  int n_c = 1;
  while (n_c < nc_max && p_miss(eta, n_c).p_m > t_m) ++n_c;
  return n_c;
}

bool within_budget(const AttackParams& params, double theta) noexcept {
  return params.n_c * std::exp2(kDesKeyBits - params.a) <= theta;
}

int minimal_advantage(double theta, int n_c) {
  require_trials(n_c);
  int a = static_cast<int>(std::ceil(kDesKeyBits - std::log2(theta / n_c) - 1e-9));
  a = std::max(a, 0);
  while (a < kDesKeyBits && !within_budget({n_c, 0, a}, theta)) ++a;
  return a;
}

OutcomeProbabilities evaluate_attack(double eta, const AttackParams& params,
                                     const AttackConstraints& constraints,
                                     const LinearApproxSpec& approx, double alpha) {
  OutcomeProbabilities p;
  p.p_fault = p_fault(eta, params.tau);
  const auto miss = p_miss(eta, params.n_c);
  p.p_1 = miss.p_1;
  p.p_m = miss.p_m;
  const auto wrong = p_false(alpha, eta, params.tau, params.n_c);
  p.p_2 = wrong.p_2;
  p.p_f = wrong.p_f;
  p.p_s = success_prob_noisy(constraints.n_max, approx, eta, params.a);
  const auto outcome = attack_outcomes(p.p_s, p.p_m, p.p_f, params.a);
  p.p_c = outcome.p_c;
  p.p_e = outcome.p_e;
  p.p_w = outcome.p_w;
  return p;
}

OptimizedAttack optimize_advantage(double eta, int tau, int n_c,
                                   const AttackConstraints& constraints,
                                   const LinearApproxSpec& approx, double alpha) {
  const int a0 = minimal_advantage(constraints.theta, n_c);
  OptimizedAttack best;
  bool have_best = false;
  for (int a = a0; a <= kDesKeyBits; ++a) {
    const AttackParams params{n_c, tau, a};
    auto probs = evaluate_attack(eta, params, constraints, approx, alpha);
    if (!have_best || probs.p_c > best.probabilities.p_c) {
      best = {params, probs};
      have_best = true;
    }
  }
  return best;
}

OptimizedAttack optimize_parameters(double eta, const AttackConstraints& constraints,
                                    const LinearApproxSpec& approx, double alpha) {
  if (!(eta >= 0.0 && eta < 0.5)) {
    throw std::invalid_argument("optimize_parameters: eta must lie in [0, 0.5), got " +
                                std::to_string(eta));
  }
  const int tau = minimal_tau(eta, constraints.t_f);
  const int n_c = minimal_trials(eta, constraints.t_m, constraints.nc_max);
  return optimize_advantage(eta, tau, n_c, constraints, approx, alpha);
}

}  // namespace cfbnoise
