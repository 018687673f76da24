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

// Special functions used by the analytic models: the standard normal CDF and
// its inverse, and binomial probabilities evaluated in the log domain.

#ifndef CFBNOISE_NUMERICS_HPP_
#define CFBNOISE_NUMERICS_HPP_

#include <span>

namespace cfbnoise::numerics {

/// Phi(x).
[[nodiscard]] double normal_cdf(double x) noexcept;

/// Q(x) = 1 - Phi(x), accurate far into the upper tail.
[[nodiscard]] double normal_upper_tail(double x) noexcept;

/// z such that Q(z) = p, for p in (0, 1).
///
/// Taking the tail probability directly keeps Phi^{-1}(1 - 2^-57) reachable,
/// since 1 - 2^-57 itself rounds to 1 in double precision. Safeguarded
/// Newton iteration on log Q inside a bisection bracket; |dz| < 1e-14 on exit.
[[nodiscard]] double normal_upper_quantile(double p);

/// Phi^{-1}(p) for p in (0, 1).
[[nodiscard]] double normal_quantile(double p);

/// log C(n, k) via log-gamma. Exact table for n = 64.
[[nodiscard]] double log_choose(int n, int k);

/// log of C(n,k) p^k (1-p)^(n-k); -inf for impossible outcomes.
[[nodiscard]] double log_binomial_pmf(int n, int k, double p);

/// log(sum exp(x_i)) accumulated from the smallest term upward.
[[nodiscard]] double log_sum_exp(std::span<const double> log_terms);

/// P[X <= k] for X ~ Binomial(n, p). k < 0 gives 0, k >= n gives 1.
[[nodiscard]] double binomial_cdf(int n, int k, double p);

/// P[X > k] for X ~ Binomial(n, p), summed directly over the upper tail.
[[nodiscard]] double binomial_upper_tail(int n, int k, double p);

/// h(p) = -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0.
[[nodiscard]] double binary_entropy(double p) noexcept;

}  // namespace cfbnoise::numerics

#endif  // CFBNOISE_NUMERICS_HPP_
