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

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <stdexcept>

#include "cfbnoise/attack_model.hpp"
#include "cfbnoise/noise.hpp"

using namespace cfbnoise;
namespace bm = boost::math;

TEST_CASE("gamma mixes avalanche and noise") {
  CHECK(gamma(0.4, 0.1) == doctest::Approx(0.42).epsilon(1e-15));
  CHECK(gamma(0.5, 0.2) == 0.5);
  CHECK(gamma(0.3, 0.0) == 0.3);
}

TEST_CASE("fault probability is the binomial upper tail") {
  const bm::binomial b(64, 0.001);
  CHECK(p_fault(0.001, 3) == doctest::Approx(bm::cdf(bm::complement(b, 3))).epsilon(1e-10));
  CHECK(p_fault(0.001, 2) > 1e-5);
  CHECK(p_fault(0.001, 3) <= 1e-5);
  CHECK(p_fault(0.0, 0) == 0.0);
  CHECK(p_fault(0.3, 64) == 0.0);
  for (int tau = 0; tau < 64; ++tau) CHECK(p_fault(0.02, tau + 1) <= p_fault(0.02, tau));
}

TEST_CASE("wrong key single trial at tau 3 with a fair avalanche") {
  // (1 + 64 + 2016 + 41664) / 2^64
  const auto f = p_false(0.5, 0.0, 3, 1);
  CHECK(f.p_2 == doctest::Approx(43745 * 0x1.0p-64).epsilon(1e-12));
  CHECK(f.p_2 == doctest::Approx(2.37e-15).epsilon(1e-2));
  const auto g = p_false(0.5, 0.01, 30, 4);
  CHECK(g.p_f == doctest::Approx(1 - std::pow(1 - g.p_2, 4)).epsilon(1e-14));
  CHECK(g.p_2 == doctest::Approx(bm::cdf(bm::binomial(64, 0.5), 30)).epsilon(1e-12));
}

TEST_CASE("miss probability and minimal trials") {
  const auto m = p_miss(0.005, 9);
  CHECK(m.p_1 == doctest::Approx(std::pow(0.995, 64)).epsilon(1e-14));
  CHECK(m.p_1 == doctest::Approx(0.7256).epsilon(1e-4));
  CHECK(m.p_m == doctest::Approx(std::pow(1 - m.p_1, 9)).epsilon(1e-12));
  CHECK(p_miss(0.0, 1).p_m == 0.0);
  for (double eta : {0.001, 0.005, 0.01, 0.0125, 0.03}) {
    const int n_c = minimal_trials(eta, 1e-5, 100);
    CHECK(p_miss(eta, n_c).p_m <= 1e-5);
    if (n_c > 1) CHECK(p_miss(eta, n_c - 1).p_m > 1e-5);
    const int tau = minimal_tau(eta, 1e-5);
    CHECK(p_fault(eta, tau) <= 1e-5);
    if (tau > 0) CHECK(p_fault(eta, tau - 1) > 1e-5);
  }
  CHECK(minimal_trials(0.2, 1e-5, 100) == 100);
}

TEST_CASE("noisy success probability") {
  const LinearApproxSpec approx;
  const bm::normal n;
  cfbnoise::CounterRng rng(4);
  for (int i = 0; i < 50; ++i) {
    const double eta = 0.02 * rng.uniform();
    const int a = static_cast<int>(rng.below(57));
    const double eps_hat = std::pow(2.0 * (0.5 - eta), 26) * approx.epsilon;
    const double z = bm::quantile(bm::complement(n, std::ldexp(1.0, -a - 1)));
    const double expected = bm::cdf(n, 2 * std::sqrt(0x1.0p46) * eps_hat - z);
    CHECK(success_prob_noisy(0x1.0p46, approx, eta, a) ==
          doctest::Approx(expected).epsilon(1e-10));
  }
  CHECK(noisy_bias(approx, 0.0) == approx.epsilon);
  CHECK(noisy_bias(approx, 0.5) == 0.0);
}

TEST_CASE("a useless approximation ranks the key uniformly") {
  const LinearApproxSpec approx;
  for (int a = 0; a <= 56; ++a) {
    CHECK(std::abs(success_prob_noisy(0x1.0p46, approx, 0.5, a) - std::ldexp(1.0, -a - 1)) <=
          1e-10);
  }
}

TEST_CASE("scan aggregation against the term-by-term sum") {
  cfbnoise::CounterRng rng(8);
  for (int i = 0; i < 100; ++i) {
    const double p_s = rng.uniform();
    const double p_m = rng.uniform();
    const double p_f = rng.uniform() * 0.01;
    const int m = 1 + static_cast<int>(rng.below(500));
    // Right key at each of the M positions with equal chance; it is found iff
    // every earlier wrong key is rejected and it is not missed.
    double sum = 0.0;
    for (int k = 0; k < m; ++k) sum += std::pow(1 - p_f, k);
    const double p_c = p_s * (1 - p_m) * sum / m;
    const double p_e = (1 - p_s) * std::pow(1 - p_f, m) + p_s * p_m * std::pow(1 - p_f, m - 1);
    const auto out = attack_outcomes_over(p_s, p_m, p_f, m);
    CHECK(out.p_c == doctest::Approx(p_c).epsilon(1e-10));
    CHECK(out.p_e == doctest::Approx(p_e).epsilon(1e-10));
    CHECK(std::abs(out.p_c + out.p_e + out.p_w - 1.0) <= 1e-12);
    CHECK(out.p_w >= 0.0);
  }
}

TEST_CASE("outcomes with perfect verification") {
  for (double p_s : {0.0, 0.25, 0.8, 1.0}) {
    for (int a : {0, 20, 56}) {
      const auto out = attack_outcomes(p_s, 0.0, 0.0, a);
      CHECK(out.p_c == p_s);
      CHECK(out.p_e == 1 - p_s);
      CHECK(out.p_w == 0.0);
    }
  }
}

TEST_CASE("outcomes partition for extreme inputs") {
  cfbnoise::CounterRng rng(9);
  for (int i = 0; i < 2000; ++i) {
    const double p_s = rng.uniform();
    const double p_m = std::pow(rng.uniform(), 8);
    const double p_f = std::pow(10.0, -20 * rng.uniform());
    const int a = static_cast<int>(rng.below(57));
    const auto out = attack_outcomes(p_s, p_m, p_f, a);
    REQUIRE(std::abs(out.p_c + out.p_e + out.p_w - 1.0) <= 1e-12);
    REQUIRE(out.p_c >= 0.0);
    REQUIRE(out.p_e >= 0.0);
    REQUIRE(out.p_w >= 0.0);
    REQUIRE(out.p_c <= p_s * (1 - p_m) + 1e-15);
  }
}

TEST_CASE("budget and minimal advantage") {
  const double theta = 0x1.0p48;
  CHECK(minimal_advantage(theta, 1) == 8);
  CHECK(minimal_advantage(theta, 20) == 13);
  CHECK(minimal_advantage(theta, 16) == 12);
  for (int n_c = 1; n_c <= 100; ++n_c) {
    const int a0 = minimal_advantage(theta, n_c);
    CHECK(within_budget({n_c, 0, a0}, theta));
    if (a0 > 0) CHECK_FALSE(within_budget({n_c, 0, a0 - 1}, theta));
  }
}

TEST_CASE("optimizer reproduces the published operating points") {
  const AttackConstraints c;
  const LinearApproxSpec approx;
  struct Row {
    double eta;
    AttackParams params;
    double p_c;
  };
  const Row rows[] = {{0.001, {5, 3, 23}, 0.9999},
                      {0.005, {9, 5, 24}, 0.9636},
                      {0.01, {16, 6, 24}, 0.5014},
                      {0.0125, {20, 7, 27}, 0.1618}};
  for (const auto& r : rows) {
    CAPTURE(r.eta);
    const auto best = optimize_parameters(r.eta, c, approx);
    CHECK(best.params == r.params);
    CHECK(std::abs(best.probabilities.p_c - r.p_c) <= 1e-4);
  }
}

TEST_CASE("optimizer properties") {
  const AttackConstraints c;
  const LinearApproxSpec approx;
  const auto zero = optimize_parameters(0.0, c, approx);
  CHECK(zero.params.n_c == 1);
  CHECK(zero.params.tau == 0);
  for (double eta = 0.0005; eta < 0.05; eta += 0.0037) {
    CAPTURE(eta);
    const auto best = optimize_parameters(eta, c, approx);
    CHECK(within_budget(best.params, c.theta));
    CHECK(best.params.a >= minimal_advantage(c.theta, best.params.n_c));
    for (int a = minimal_advantage(c.theta, best.params.n_c); a <= 56; ++a) {
      const auto other = evaluate_attack(eta, {best.params.n_c, best.params.tau, a}, c, approx);
      CHECK(other.p_c <= best.probabilities.p_c);
      if (a < best.params.a) CHECK(other.p_c < best.probabilities.p_c);
    }
  }
  CHECK_THROWS_AS((void)optimize_parameters(0.5, c, approx), std::invalid_argument);
  CHECK_THROWS_AS((void)optimize_parameters(-1e-3, c, approx), std::invalid_argument);
}
