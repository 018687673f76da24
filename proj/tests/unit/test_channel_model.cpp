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

#include <cmath>
#include <stdexcept>

#include "cfbnoise/channel_model.hpp"
#include "cfbnoise/noise.hpp"
#include "cfbnoise/numerics.hpp"

using namespace cfbnoise;

namespace {

long double choose(int n, int k) {
  long double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

long double binom(int n, int k, long double p) {
  if (k < 0 || k > n) return 0;
  return choose(n, k) * std::pow(p, k) * std::pow(1 - p, n - k);
}

// S3 weight law by conditioning on the noise weight j >= 1: the j noisy
// positions flip unless the avalanche also flipped them.
std::array<long double, 65> s3_by_convolution(double alpha, double eta) {
  std::array<long double, 65> out{};
  const long double q = 1 - std::pow(1.0L - eta, 64);
  for (int j = 1; j <= 64; ++j) {
    const long double pj = binom(64, j, eta) / q;
    for (int k = 0; k <= 64 - j; ++k) {
      for (int l = 0; l <= j; ++l) out[k + l] += pj * binom(64 - j, k, alpha) * binom(j, l, 1 - alpha);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("steady state closed form against a linear solve for random q") {
  CounterRng rng(12);
  for (int i = 0; i < 100; ++i) {
    const double q = rng.uniform();
    const auto sol = transition_and_steady_state(q);
    CHECK(sol.max_deviation <= 1e-12);
    double sum = 0;
    for (double p : sol.steady_state) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    for (int r = 0; r < 4; ++r) {
      double row = 0;
      for (double t : sol.transition[r]) row += t;
      CHECK(row == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS((void)transition_and_steady_state(1.5), std::invalid_argument);
}

TEST_CASE("steady state at the default operating point") {
  const double q = q_of_eta(0.0125);
  CHECK(q == doctest::Approx(0.553).epsilon(1e-3));
  const auto p = transition_and_steady_state(q).steady_state;
  CHECK(p[0] == doctest::Approx(0.200).epsilon(2e-3));
  CHECK(p[1] == doctest::Approx(0.247).epsilon(2e-3));
  CHECK(p[3] == doctest::Approx(0.306).epsilon(2e-3));
}

TEST_CASE("state classification") {
  CHECK(classify_state(false, false) == MarkovState::kS0);
  CHECK(classify_state(false, true) == MarkovState::kS1);
  CHECK(classify_state(true, false) == MarkovState::kS2);
  CHECK(classify_state(true, true) == MarkovState::kS3);
  CHECK(to_string(MarkovState::kS3) == "S3");
}

TEST_CASE("error laws against a direct convolution") {
  for (double alpha : {0.5, 0.45, 0.3}) {
    for (double eta : {1e-4, 0.005, 0.0125, 0.05, 0.2}) {
      CAPTURE(alpha);
      CAPTURE(eta);
      const auto s3 = error_weight_distribution(MarkovState::kS3, alpha, eta);
      const auto oracle = s3_by_convolution(alpha, eta);
      for (int w = 0; w <= 64; ++w) {
        CHECK(std::abs(s3.probs[w] - static_cast<double>(oracle[w])) <= 1e-12);
      }
      CHECK(s3.total() == doctest::Approx(1.0).epsilon(1e-12));
      const auto s1 = error_weight_distribution(MarkovState::kS1, alpha, eta);
      const long double q = 1 - std::pow(1.0L - eta, 64);
      CHECK(s1.probs[0] == 0.0);
      for (int w = 1; w <= 64; ++w) {
        CHECK(std::abs(s1.probs[w] - static_cast<double>(binom(64, w, eta) / q)) <= 1e-13);
      }
    }
  }
  const auto s2 = error_weight_distribution(MarkovState::kS2, 0.3, 0.01);
  CHECK(s2.mean_weight() == doctest::Approx(64 * 0.3));
  CHECK(error_weight_distribution(MarkovState::kS0, 0.5, 0.01).probs[0] == 1.0);
}

TEST_CASE("zero noise limits") {
  const auto s1 = error_weight_distribution(MarkovState::kS1, 0.5, 0.0);
  CHECK(s1.probs[1] == 1.0);
  const auto s3 = error_weight_distribution(MarkovState::kS3, 0.4, 0.0);
  const auto near = error_weight_distribution(MarkovState::kS3, 0.4, 1e-9);
  for (int w = 0; w <= 64; ++w) CHECK(std::abs(s3.probs[w] - near.probs[w]) <= 1e-6);
  CHECK(conditional_entropy(MarkovState::kS1, 0.5, 0.0) == doctest::Approx(6.0));
}

TEST_CASE("entropy: two routes agree") {
  CounterRng rng(21);
  for (int i = 0; i < 60; ++i) {
    const double alpha = 0.3 + 0.2 * rng.uniform();
    const double eta = 0.05 * rng.uniform() + 1e-6;
    for (auto s : {MarkovState::kS1, MarkovState::kS3}) {
      const double direct = conditional_entropy(s, alpha, eta);
      const double via_weights = entropy_from_weights(error_weight_distribution(s, alpha, eta));
      CHECK(std::abs(direct - via_weights) <= 1e-9);
    }
  }
  CHECK_THROWS_AS((void)conditional_entropy(MarkovState::kS0, 0.5, 0.01), std::invalid_argument);
  CHECK_THROWS_AS((void)conditional_entropy(MarkovState::kS2, 0.5, 0.01), std::invalid_argument);
}

TEST_CASE("fair avalanche makes S2 and S3 useless") {
  for (double eta : {1e-4, 0.0125, 0.05, 0.3}) {
    CHECK(std::abs(conditional_entropy(MarkovState::kS3, 0.5, eta) - 64.0) <= 1e-9);
    CHECK(std::abs(state_capacity(MarkovState::kS3, 0.5, eta)) <= 1e-9);
    CHECK(state_capacity(MarkovState::kS2, 0.5, eta) == 0.0);
  }
}

TEST_CASE("S1 entropy tends to log2(64) as the noise vanishes") {
  CHECK(std::abs(conditional_entropy(MarkovState::kS1, 0.5, 1e-8) - 6.0) <= 1e-3);
}

TEST_CASE("main capacity") {
  CHECK(main_capacity(0.5, 0.0) == 1.0);
  const auto model = make_channel_model(0.5, 0.0125);
  CHECK(model.average_capacity() == doctest::Approx(main_capacity(0.5, 0.0125)).epsilon(1e-14));
  double previous = 2.0;
  for (double eta = 1e-4; eta < 0.05; eta += 1e-4) {
    const double c = main_capacity(0.5, eta);
    CHECK(c < previous);
    previous = c;
  }
}

TEST_CASE("secrecy capacity closed form") {
  CounterRng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double eta = 0.05 * rng.uniform();
    const double p_c = rng.uniform();
    const double p_e = (1 - p_c) * rng.uniform();
    const AttackOutcome outcome{p_c, p_e, 1 - p_c - p_e};
    const auto r = secrecy_capacity(0.5, eta, outcome);
    CHECK(std::abs(r.c_s - r.c_s_closed_form) <= 1e-12);
    CHECK(r.c_e == doctest::Approx(outcome.p_w * (1 - numerics::binary_entropy(gamma(0.5, eta))) +
                                   p_c * r.c_b));
  }
  const auto all_known = secrecy_capacity(0.5, 0.01, {1.0, 0.0, 0.0});
  CHECK(all_known.c_s == doctest::Approx(0.0));
  CHECK(all_known.degraded);
}
