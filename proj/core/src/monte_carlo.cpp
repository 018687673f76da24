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

#include "cfbnoise/monte_carlo.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "cfbnoise/avalanche.hpp"
#include "cfbnoise/cfb.hpp"
#include "cfbnoise/des.hpp"
#include "cfbnoise/noise.hpp"
#include "cfbnoise/parallel.hpp"
#include "cfbnoise/verification.hpp"

namespace cfbnoise {
namespace {

// Per-check seed derivation so checks never share random streams.
enum class CheckTag : std::uint64_t {
  kOccupancy = 11,
  kErrorWeights = 12,
  kVerification = 13,
  kReducedAttack = 14,
  kAvalanche = 15,
};

std::uint64_t check_seed(std::uint64_t seed, CheckTag tag, std::uint64_t sub = 0) {
  return mix64(mix64(seed + static_cast<std::uint64_t>(tag)) ^ sub);
}

// Prevents the sampling loops from running forever when a state is
// practically unreachable.
constexpr std::uint64_t kMaxSimulatedBlocks = 200'000'000;

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

ValidationCheck bound_check(std::string name, std::string formula, double analytic,
                            double empirical, std::uint64_t samples, double bound) {
  ValidationCheck c;
  c.name = std::move(name);
  c.formula = std::move(formula);
  c.analytic = analytic;
  c.empirical = empirical;
  c.samples = samples;
  c.criterion = "|diff|<=" + format_number(bound);
  c.passed = std::abs(empirical - analytic) <= bound;
  return c;
}

DesKey random_key(CounterRng& rng) { return DesKey(rng()); }

}  // namespace

void ValidationConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("ValidationConfig: " + msg); };
  if (!(eta >= 0.0 && eta <= 0.5)) fail("eta must lie in [0, 0.5]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("alpha must lie in [0, 1]");
  if (frames < 1) fail("frames must be >= 1");
  if (blocks_per_frame < 2) fail("blocks_per_frame must be >= 2");
  if (trials < 1000) fail("trials must be >= 1000 for 3-sigma comparisons");
  if (attack_trials < 1000) fail("attack_trials must be >= 1000 for 3-sigma comparisons");
  if (avalanche_trials < 1) fail("avalanche_trials must be >= 1");
  if (!(tv_bound > 0.0)) fail("tv_bound must be positive");
  if (verify_n_c < 1 || reduced_n_c < 1) fail("trial counts per candidate must be >= 1");
  if (inflated_tau < 0 || inflated_tau > 64 || reduced_tau < 0 || reduced_tau > 64) {
    fail("thresholds must lie in [0, 64]");
  }
  if (reduced_key_bits < 1 || reduced_key_bits > 24) fail("reduced_key_bits must lie in [1, 24]");
  if (reduced_advantage < 0 || reduced_advantage > reduced_key_bits) {
    fail("reduced_advantage must lie in [0, reduced_key_bits]");
  }
  if (!(synthetic_success >= 0.0 && synthetic_success <= 1.0)) {
    fail("synthetic_success must lie in [0, 1]");
  }
}

bool ValidationReport::all_passed() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void ValidationReport::append(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string ValidationReport::to_text() const {
  std::string out = "# check\tformula\tanalytic\tempirical\tstderr\tsamples\tcriterion\tverdict\n";
  for (const auto& c : checks) {
    out += c.name + '\t' + c.formula + '\t' + format_number(c.analytic) + '\t' +
           format_number(c.empirical) + '\t' + format_number(c.std_error) + '\t' +
           std::to_string(c.samples) + '\t' + c.criterion + '\t' + (c.passed ? "PASS" : "FAIL") +
           '\n';
  }
  return out;
}

ValidationCheck proportion_check(std::string name, std::string formula, double analytic,
                                 std::uint64_t successes, std::uint64_t n) {
  ValidationCheck c;
  c.name = std::move(name);
  c.formula = std::move(formula);
  c.analytic = analytic;
  c.samples = n;
  c.criterion = "3sigma";
  if (n == 0) {
    c.passed = false;
    c.criterion = "no samples";
    return c;
  }
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  c.empirical = p;
  c.std_error = std::max(std::sqrt(p * (1.0 - p) / nn), 1.0 / nn);
  c.passed = std::abs(p - analytic) <= 3.0 * c.std_error;
  return c;
}

ValidationReport validate_avalanche(const ValidationConfig& cfg) {
  AvalancheConfig ac;
  ac.key_trials = std::min<std::uint64_t>(100, cfg.avalanche_trials);
  ac.block_trials = (cfg.avalanche_trials + ac.key_trials - 1) / ac.key_trials;
  ac.seed = check_seed(cfg.seed, CheckTag::kAvalanche);
  const auto est = measure_avalanche(ac);

  ValidationCheck c;
  c.name = "avalanche.alpha";
  c.formula = "avalanche rate alpha (input bit flip)";
  c.analytic = 0.5;
  c.empirical = est.alpha;
  c.std_error = est.std_error;
  c.samples = est.samples;
  c.criterion = "in[0.49,0.51]";
  c.passed = est.alpha >= 0.49 && est.alpha <= 0.51;
  return {{c}};
}

ValidationReport validate_state_occupancy(const ValidationConfig& cfg) {
  cfg.validate();
  if (cfg.blocks_per_frame < 1000) {
    throw std::invalid_argument("validate_state_occupancy: blocks_per_frame must be >= 1000");
  }
  const NoiseSpec noise{cfg.eta, check_seed(cfg.seed, CheckTag::kOccupancy)};
  std::array<std::uint64_t, 4> occupancy{};
  std::array<std::array<std::uint64_t, 4>, 4> transitions{};
  std::uint64_t blocks = 0;

  for (std::uint64_t f = 0; f < cfg.frames; ++f) {
    bool previous_noisy = noise_block(noise, f, 0).weight() > 0;
    int previous_state = -1;
    for (std::uint64_t i = 1; i < cfg.blocks_per_frame; ++i) {
      const bool noisy = noise_block(noise, f, i).weight() > 0;
      const int state = static_cast<int>(classify_state(previous_noisy, noisy));
      ++occupancy[state];
      if (previous_state >= 0) ++transitions[previous_state][state];
      previous_state = state;
      previous_noisy = noisy;
      ++blocks;
    }
  }

  const auto chain = transition_and_steady_state(q_of_eta(cfg.eta));
  ValidationReport report;
  for (int s = 0; s < 4; ++s) {
    report.checks.push_back(proportion_check(
        "occupancy." + std::string(to_string(static_cast<MarkovState>(s))),
        "steady state vector [(1-q)^2, q(1-q), q(1-q), q^2]", chain.steady_state[s], occupancy[s],
        blocks));
  }
  std::uint64_t impossible = 0;
  for (int from = 0; from < 4; ++from) {
    std::uint64_t row_total = 0;
    for (int to = 0; to < 4; ++to) row_total += transitions[from][to];
    for (int to = 0; to < 4; ++to) {
      if (chain.transition[from][to] == 0.0) {
        impossible += transitions[from][to];
        continue;
      }
      if (row_total == 0) continue;  // state never visited (eta = 0)
      report.checks.push_back(proportion_check(
          "transition." + std::string(to_string(static_cast<MarkovState>(from))) + "->" +
              std::string(to_string(static_cast<MarkovState>(to))),
          "transition matrix T", chain.transition[from][to], transitions[from][to], row_total));
    }
  }
  ValidationCheck zero;
  zero.name = "transition.impossible";
  zero.formula = "zero entries of transition matrix T";
  zero.empirical = static_cast<double>(impossible);
  zero.samples = blocks;
  zero.criterion = "count==0";
  zero.passed = impossible == 0;
  report.checks.push_back(zero);
  return report;
}

ValidationReport validate_error_weights(const ValidationConfig& cfg, MarkovState state) {
  cfg.validate();
  const auto model = error_weight_distribution(state, cfg.alpha, cfg.eta);
  const auto chain = transition_and_steady_state(q_of_eta(cfg.eta));
  const std::string label = "weights." + std::string(to_string(state));
  const std::string formula = state == MarkovState::kS1   ? "S1 error law (noise | >=1 flip)"
                              : state == MarkovState::kS3 ? "S3 error law (gamma vs alpha bracket)"
                              : state == MarkovState::kS2 ? "S2 error law Binomial(64, alpha)"
                                                          : "S0 error law (no error)";

  const std::uint64_t seed = check_seed(cfg.seed, CheckTag::kErrorWeights,
                                        static_cast<std::uint64_t>(state));
  const NoiseSpec noise{cfg.eta, seed};
  std::array<std::uint64_t, 65> histogram{};
  std::uint64_t hits = 0;
  std::uint64_t simulated = 0;

  const bool reachable = chain.steady_state[static_cast<int>(state)] > 0.0;
  for (std::uint64_t f = 0; reachable && hits < cfg.trials && simulated < kMaxSimulatedBlocks; ++f) {
    CounterRng key_rng(seed, static_cast<std::uint64_t>(StreamDomain::kKey), f);
    const DesCipher cipher(random_key(key_rng));
    auto trace = make_cfb_trace(cipher, cfg.iv, random_blocks(seed, f, cfg.blocks_per_frame),
                                noise, f);
    const auto decrypted = cfb_decrypt(cipher, cfg.iv, trace.noisy_ciphertexts);
    simulated += trace.size();
    for (std::size_t i = 1; i < trace.size() && hits < cfg.trials; ++i) {
      const MarkovState s = classify_state(trace.noise_blocks[i - 1].weight() > 0,
                                           trace.noise_blocks[i].weight() > 0);
      if (s != state) continue;
      ++histogram[(trace.plaintexts[i] ^ decrypted[i]).weight()];
      ++hits;
    }
  }

  ValidationReport report;
  if (!reachable) {
    ValidationCheck c;
    c.name = label + ".unreachable";
    c.formula = "steady state vector";
    c.criterion = "state probability 0";
    c.passed = true;
    report.checks.push_back(c);
    return report;
  }

  double tv = 0.0;
  double mean = 0.0;
  for (int w = 0; w <= 64; ++w) {
    const double p = hits ? static_cast<double>(histogram[w]) / static_cast<double>(hits) : 0.0;
    tv += std::abs(p - model.probs[w]);
    mean += w * p;
  }
  tv *= 0.5;
  ValidationCheck tv_check = bound_check(label + ".tv", formula, 0.0, tv, hits, cfg.tv_bound);
  tv_check.criterion = "tv<=" + format_number(cfg.tv_bound);
  if (hits < cfg.trials) {
    tv_check.passed = false;
    tv_check.criterion += " (insufficient samples)";
  }
  report.checks.push_back(tv_check);

  if (state == MarkovState::kS2) {
    ValidationCheck c;
    c.name = label + ".alpha";
    c.formula = "avalanche rate alpha from S2 mean weight / 64";
    c.analytic = cfg.alpha;
    c.empirical = mean / 64.0;
    c.samples = hits;
    c.criterion = "in[0.49,0.51]";
    c.passed = c.empirical >= 0.49 && c.empirical <= 0.51 && hits >= cfg.trials;
    report.checks.push_back(c);
  }
  return report;
}

ValidationReport validate_verification_rates(const ValidationConfig& cfg,
                                             const AttackParams& params) {
  cfg.validate();
  if (params.n_c < 1) throw std::invalid_argument("validate_verification_rates: n_c must be >= 1");
  const std::uint64_t seed = check_seed(cfg.seed, CheckTag::kVerification);
  const NoiseSpec noise{cfg.eta, seed};
  const auto n_c = static_cast<std::size_t>(params.n_c);

  struct Counts {
    std::uint64_t stage_success = 0;
    std::uint64_t misses = 0;
    std::uint64_t wrong_stage_success = 0;
    std::uint64_t wrong_accepts = 0;
  };
  auto run = [&](std::size_t begin, std::size_t end) {
    Counts c;
    for (std::size_t t = begin; t < end; ++t) {
      CounterRng rng(seed, static_cast<std::uint64_t>(StreamDomain::kTrial), t);
      const DesCipher right(random_key(rng));
      const DesCipher wrong(random_key(rng));
      // Stage inputs start at block 0, a real (noisy) ciphertext.
      const auto trace = make_cfb_trace(right, cfg.iv, random_blocks(seed, t, n_c + 1), noise, t);
      const auto weights = stage_residual_weights(trace, right, 1, n_c);
      bool accepted = false;
      for (int w : weights) {
        if (w <= params.tau) {
          ++c.stage_success;
          accepted = true;
        }
      }
      if (!accepted) ++c.misses;
      const auto wrong_weights = stage_residual_weights(trace, wrong, 1, n_c);
      bool wrong_accepted = false;
      for (int w : wrong_weights) {
        if (w <= cfg.inflated_tau) {
          ++c.wrong_stage_success;
          wrong_accepted = true;
        }
      }
      if (wrong_accepted) ++c.wrong_accepts;
    }
    return c;
  };
  Counts total;
  for (const auto& c : parallel_chunks<Counts>(cfg.trials, run)) {
    total.stage_success += c.stage_success;
    total.misses += c.misses;
    total.wrong_stage_success += c.wrong_stage_success;
    total.wrong_accepts += c.wrong_accepts;
  }

  const auto miss = p_miss(cfg.eta, params.n_c);
  const auto wrong = p_false(cfg.alpha, cfg.eta, cfg.inflated_tau, params.n_c);
  ValidationReport report;
  report.checks.push_back(proportion_check("verify.stage_success", "P_1 = (1-eta)^64", miss.p_1,
                                           total.stage_success, cfg.trials * n_c));
  report.checks.push_back(proportion_check("verify.miss", "P_m = (1-P_1)^N_c", miss.p_m,
                                           total.misses, cfg.trials));
  report.checks.push_back(proportion_check("verify.wrong_stage_success",
                                           "P_2 = P[Bin(64, gamma) <= tau]", wrong.p_2,
                                           total.wrong_stage_success, cfg.trials * n_c));
  report.checks.push_back(proportion_check("verify.false_accept", "P_F = 1-(1-P_2)^N_c",
                                           wrong.p_f, total.wrong_accepts, cfg.trials));
  // Chained stages share ciphertexts, so independence across the N_c wrong-key
  // stages is an assumption. Compare the observed acceptance with what
  // independent stages at the observed per-stage rate would give.
  const double stage_rate = static_cast<double>(total.wrong_stage_success) /
                            static_cast<double>(cfg.trials * n_c);
  report.checks.push_back(proportion_check(
      "verify.stage_independence", "1-(1-P_2_observed)^N_c vs observed P_F",
      1.0 - std::pow(1.0 - stage_rate, static_cast<double>(n_c)), total.wrong_accepts,
      cfg.trials));
  return report;
}

AttackOutcome reduced_keyspace_prediction(const ValidationConfig& cfg, double eta) {
  const auto miss = p_miss(eta, cfg.reduced_n_c);
  const auto wrong = p_false(cfg.alpha, eta, cfg.reduced_tau, cfg.reduced_n_c);
  return attack_outcomes_over(cfg.synthetic_success, miss.p_m, wrong.p_f,
                              std::exp2(cfg.reduced_key_bits - cfg.reduced_advantage));
}

ValidationReport reduced_keyspace_attack(const ValidationConfig& cfg, double eta) {
  cfg.validate();
  validate_eta(eta);
  const std::uint64_t seed = check_seed(cfg.seed, CheckTag::kReducedAttack);
  const NoiseSpec noise{eta, seed};
  const std::uint64_t subspace = std::uint64_t{1} << cfg.reduced_key_bits;
  const std::uint64_t slice = std::uint64_t{1} << (cfg.reduced_key_bits - cfg.reduced_advantage);
  const std::uint64_t unknown_mask = subspace - 1;  // low r effective key bits
  const AttackParams params{cfg.reduced_n_c, cfg.reduced_tau, cfg.reduced_advantage};
  const auto n_c = static_cast<std::size_t>(cfg.reduced_n_c);

  struct Counts {
    std::uint64_t correct = 0;
    std::uint64_t erased = 0;
    std::uint64_t wrong = 0;
    std::uint64_t in_slice = 0;
  };
  auto run = [&](std::size_t begin, std::size_t end) {
    Counts c;
    std::vector<std::uint64_t> ranking;
    std::unordered_set<std::uint64_t> chosen;
    for (std::size_t t = begin; t < end; ++t) {
      CounterRng rng(seed, static_cast<std::uint64_t>(StreamDomain::kRanking), t);
      const std::uint64_t true_bits = rng() >> 8;  // 56 effective bits
      const std::uint64_t true_index = true_bits & unknown_mask;
      const bool ranked = rng.bernoulli(cfg.synthetic_success);
      const std::uint64_t wrong_count = ranked ? slice - 1 : slice;

      // Floyd's sampling of distinct wrong indices from subspace \ {true}.
      chosen.clear();
      ranking.clear();
      const std::uint64_t pool = subspace - 1;
      for (std::uint64_t j = pool - wrong_count; j < pool; ++j) {
        const std::uint64_t v = rng.below(j + 1);
        const std::uint64_t pick = chosen.insert(v).second ? v : (chosen.insert(j), j);
        ranking.push_back(pick);
      }
      for (auto& v : ranking) v = v >= true_index ? v + 1 : v;
      for (std::size_t i = ranking.size(); i > 1; --i) {
        std::swap(ranking[i - 1], ranking[rng.below(i)]);
      }
      if (ranked) {
        ++c.in_slice;
        const auto pos = static_cast<std::ptrdiff_t>(rng.below(ranking.size() + 1));
        ranking.insert(ranking.begin() + pos, true_index);
      }

      const DesCipher right(DesKey::from_effective_bits(true_bits));
      const auto trace =
          make_cfb_trace(right, cfg.iv, random_blocks(seed, t, n_c + 1), noise, t);
      bool decided = false;
      for (std::uint64_t index : ranking) {
        const DesCipher candidate(
            DesKey::from_effective_bits((true_bits & ~unknown_mask) | index));
        if (verify_candidate(trace, candidate, params, 1)) {
          (index == true_index ? c.correct : c.wrong) += 1;
          decided = true;
          break;
        }
      }
      if (!decided) ++c.erased;
    }
    return c;
  };
  Counts total;
  for (const auto& c : parallel_chunks<Counts>(cfg.attack_trials, run)) {
    total.correct += c.correct;
    total.erased += c.erased;
    total.wrong += c.wrong;
    total.in_slice += c.in_slice;
  }

  const auto predicted = reduced_keyspace_prediction(cfg, eta);
  const std::uint64_t n = cfg.attack_trials;
  const std::string m = "M=2^" + std::to_string(cfg.reduced_key_bits - cfg.reduced_advantage);
  ValidationReport report;
  report.checks.push_back(proportion_check("reduced_attack.p_c",
                                           "P_c exact scan aggregation, " + m, predicted.p_c,
                                           total.correct, n));
  report.checks.push_back(proportion_check("reduced_attack.p_e",
                                           "P_e exact scan aggregation, " + m, predicted.p_e,
                                           total.erased, n));
  report.checks.push_back(proportion_check("reduced_attack.p_w", "P_w = 1 - P_c - P_e, " + m,
                                           predicted.p_w, total.wrong, n));
  report.checks.push_back(proportion_check("reduced_attack.p_s", "synthetic ranking rate P_s",
                                           cfg.synthetic_success, total.in_slice, n));
  ValidationCheck partition;
  partition.name = "reduced_attack.partition";
  partition.formula = "P_c + P_e + P_w = 1";
  partition.analytic = static_cast<double>(n);
  partition.empirical = static_cast<double>(total.correct + total.erased + total.wrong);
  partition.samples = n;
  partition.criterion = "counts sum to trials";
  partition.passed = total.correct + total.erased + total.wrong == n;
  report.checks.push_back(partition);
  return report;
}

ValidationReport run_validation(const ValidationConfig& cfg) {
  cfg.validate();
  ValidationReport report = validate_avalanche(cfg);
  report.append(validate_state_occupancy(cfg));
  for (MarkovState s : kAllStates) report.append(validate_error_weights(cfg, s));
  const AttackParams params{cfg.verify_n_c, minimal_tau(cfg.eta, 1e-5), 0};
  report.append(validate_verification_rates(cfg, params));
  report.append(reduced_keyspace_attack(cfg, cfg.eta));
  return report;
}

}  // namespace cfbnoise
