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

#include "cfbnoise/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cfbnoise::numerics {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

const std::array<double, 65>& log_choose_64() {
  static const std::array<double, 65> table = [] {
    std::array<double, 65> t{};
    for (int k = 0; k <= 64; ++k) {
      t[k] = std::lgamma(65.0) - std::lgamma(k + 1.0) - std::lgamma(65.0 - k);
    }
    return t;
  }();
  return table;
}

double normal_density(double z) noexcept {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

// Abramowitz & Stegun 26.2.23 starting point for p <= 0.5, |error| < 4.5e-4.
double upper_quantile_guess(double p) noexcept {
  const double t = std::sqrt(-2.0 * std::log(p));
  return t - (2.515517 + t * (0.802853 + t * 0.010328)) /
                 (1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308)));
}

}  // namespace

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_upper_tail(double x) noexcept { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double normal_upper_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_upper_quantile: p must lie in (0, 1)");
  }
  if (p == 0.5) return 0.0;
  if (p > 0.5) return -normal_upper_quantile(1.0 - p);  // 1 - p is exact here

  const double log_p = std::log(p);
  double lo = 0.0;
  double hi = 40.0;
  double z = upper_quantile_guess(p);
  for (int iter = 0; iter < 200; ++iter) {
    const double tail = normal_upper_tail(z);
    const double f = std::log(tail) - log_p;  // decreasing in z
    if (f == 0.0) return z;
    if (f > 0.0) {
      lo = z;
    } else {
      hi = z;
    }
    double next = z + f * tail / normal_density(z);
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - z) < 1e-14 * std::max(1.0, std::abs(z))) return next;
    z = next;
  }
  return z;
}

double normal_quantile(double p) { return -normal_upper_quantile(p); }

double log_choose(int n, int k) {
  if (k < 0 || k > n) return kNegInf;
  if (n == 64) return log_choose_64()[k];
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_binomial_pmf(int n, int k, double p) {
  if (k < 0 || k > n) return kNegInf;
  if (p <= 0.0) return k == 0 ? 0.0 : kNegInf;
  if (p >= 1.0) return k == n ? 0.0 : kNegInf;
  return log_choose(n, k) + k * std::log(p) + (n - k) * std::log1p(-p);
}

double log_sum_exp(std::span<const double> log_terms) {
  std::vector<double> sorted(log_terms.begin(), log_terms.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted.back() == kNegInf) return kNegInf;
  const double top = sorted.back();
  double sum = 0.0;
  for (double x : sorted) sum += std::exp(x - top);
  return top + std::log(sum);
}

double binomial_cdf(int n, int k, double p) {
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) terms.push_back(log_binomial_pmf(n, i, p));
  return std::min(1.0, std::exp(log_sum_exp(terms)));
}

double binomial_upper_tail(int n, int k, double p) {
  if (k < 0) return 1.0;
  if (k >= n) return 0.0;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n - k));
  for (int i = k + 1; i <= n; ++i) terms.push_back(log_binomial_pmf(n, i, p));
  return std::min(1.0, std::exp(log_sum_exp(terms)));
}

double binary_entropy(double p) noexcept {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace cfbnoise::numerics
