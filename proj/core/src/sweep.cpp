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

#include "cfbnoise/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "cfbnoise/parallel.hpp"

namespace cfbnoise {
namespace {

// Every this many points the cached (tau, N_c) is recomputed from scratch.
constexpr std::size_t kSpotCheckStride = 50;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Both thresholds are nondecreasing in eta, so a chunk walks them upward from
// the previous point. The step below the start is probed too, which keeps
// the result exact even if monotonicity were violated.
int tau_from(double eta, double t_f, int start) {
  if (start > 0 && p_fault(eta, start - 1) <= t_f) return minimal_tau(eta, t_f);
  int tau = start;
  while (tau < kBlockBits && p_fault(eta, tau) > t_f) ++tau;
  return tau;
}

int trials_from(double eta, double t_m, int nc_max, int start) {
  if (start > 1 && p_miss(eta, start - 1).p_m <= t_m) return minimal_trials(eta, t_m, nc_max);
  int n_c = start;
  while (n_c < nc_max && p_miss(eta, n_c).p_m > t_m) ++n_c;
  return n_c;
}

SweepRow finish_row(double eta, double alpha, OptimizedAttack best) {
  SweepRow row;
  row.eta = eta;
  row.params = best.params;
  row.probabilities = best.probabilities;
  row.capacity = secrecy_capacity(alpha, eta, best.probabilities.outcome());
  return row;
}

}  // namespace

void SweepConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid grid: " + msg); };
  if (!(eta_start >= 0.0)) fail("eta_start must be >= 0");
  if (!(eta_end < 0.5)) fail("eta_end must be < 0.5");
  if (!(eta_start <= eta_end)) fail("eta_start must not exceed eta_end");
  if (!(eta_step > 0.0) || !std::isfinite(eta_step)) fail("eta_step must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("alpha must lie in [0, 1]");
  if ((eta_end - eta_start) / eta_step > 1e7) fail("more than 1e7 grid points");
}

std::vector<double> SweepConfig::grid() const {
  validate();
  const auto n = static_cast<std::size_t>(std::floor((eta_end - eta_start) / eta_step + 1e-9)) + 1;
  std::vector<double> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = eta_start + static_cast<double>(i) * eta_step;
  return points;
}

SweepRow evaluate_point(double eta, double alpha, const AttackConstraints& constraints,
                        const LinearApproxSpec& approx) {
  return finish_row(eta, alpha, optimize_parameters(eta, constraints, approx, alpha));
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned max_threads) {
  const auto etas = cfg.grid();
  const auto& c = cfg.constraints;
  auto chunk = [&](std::size_t begin, std::size_t end) {
    std::vector<SweepRow> rows;
    rows.reserve(end - begin);
    int tau = 0;
    int n_c = 1;
    for (std::size_t i = begin; i < end; ++i) {
      const double eta = etas[i];
      tau = tau_from(eta, c.t_f, tau);
      n_c = trials_from(eta, c.t_m, c.nc_max, n_c);
      if ((i - begin) % kSpotCheckStride == 0 &&
          (tau != minimal_tau(eta, c.t_f) || n_c != minimal_trials(eta, c.t_m, c.nc_max))) {
        throw std::logic_error("sweep: cached (tau, N_c) disagrees with a fresh search at eta=" +
                               fmt(eta));
      }
      rows.push_back(
          finish_row(eta, cfg.alpha, optimize_advantage(eta, tau, n_c, c, cfg.approx, cfg.alpha)));
    }
    return rows;
  };
  std::vector<SweepRow> out;
  out.reserve(etas.size());
  for (auto& part : parallel_chunks<std::vector<SweepRow>>(etas.size(), chunk, max_threads)) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string csv_header() { return "eta,n_c,tau,a,p_s,p_m,p_f,p_c,p_e,p_w,c_b,c_e,c_s"; }

std::string csv_row(const SweepRow& row) {
  const auto& p = row.probabilities;
  return fmt(row.eta) + ',' + std::to_string(row.params.n_c) + ',' +
         std::to_string(row.params.tau) + ',' + std::to_string(row.params.a) + ',' + fmt(p.p_s) +
         ',' + fmt(p.p_m) + ',' + fmt(p.p_f) + ',' + fmt(p.p_c) + ',' + fmt(p.p_e) + ',' +
         fmt(p.p_w) + ',' + fmt(row.capacity.c_b) + ',' + fmt(row.capacity.c_e) + ',' +
         fmt(row.capacity.c_s);
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out = csv_header() + '\n';
  for (const auto& r : rows) out += csv_row(r) + '\n';
  return out;
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << to_csv(rows);
  f.flush();
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::string format_optimize_report(const SweepRow& row, const AttackConstraints& constraints) {
  const auto& p = row.probabilities;
  const double cost = row.params.n_c * std::exp2(kDesKeyBits - row.params.a);
  std::string out;
  auto line = [&out](const std::string& k, const std::string& v) { out += k + " = " + v + '\n'; };
  line("eta", fmt(row.eta));
  line("n_c", std::to_string(row.params.n_c));
  line("tau", std::to_string(row.params.tau));
  line("a", std::to_string(row.params.a));
  line("p_fault", fmt(p.p_fault));
  line("p_1", fmt(p.p_1));
  line("p_m", fmt(p.p_m));
  line("p_2", fmt(p.p_2));
  line("p_f", fmt(p.p_f));
  line("p_s", fmt(p.p_s));
  line("p_c", fmt(p.p_c));
  line("p_e", fmt(p.p_e));
  line("p_w", fmt(p.p_w));
  line("budget", "n_c*2^(56-a) = " + fmt(cost) + " <= theta = " + fmt(constraints.theta) +
                     (within_budget(row.params, constraints.theta) ? " ok" : " VIOLATED"));
  return out;
}

std::string format_capacity_report(const SweepRow& row, double alpha) {
  const auto model = make_channel_model(alpha, row.eta);
  const auto& cap = row.capacity;
  std::string out;
  auto line = [&out](const std::string& k, const std::string& v) { out += k + " = " + v + '\n'; };
  line("eta", fmt(row.eta));
  line("alpha", fmt(alpha));
  line("q", fmt(model.q));
  for (MarkovState s : kAllStates) {
    const int i = static_cast<int>(s);
    line("steady." + std::string(to_string(s)), fmt(model.steady_state[i]));
    line("capacity." + std::string(to_string(s)), fmt(model.state_capacities[i]));
  }
  line("p_c", fmt(row.probabilities.p_c));
  line("p_e", fmt(row.probabilities.p_e));
  line("p_w", fmt(row.probabilities.p_w));
  line("c_b", fmt(cap.c_b));
  line("c_e", fmt(cap.c_e));
  line("c_s", fmt(cap.c_s));
  line("c_s_closed_form", fmt(cap.c_s_closed_form));
  line("degraded", cap.degraded ? "yes" : "NO (C_E > C_B)");
  return out;
}

}  // namespace cfbnoise
