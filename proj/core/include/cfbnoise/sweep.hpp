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

// Grid sweep over the noise rate: the attacker re-optimizes at every point,
// and each row carries the outcome probabilities plus the capacities.

#ifndef CFBNOISE_SWEEP_HPP_
#define CFBNOISE_SWEEP_HPP_

#include <string>
#include <vector>

#include "cfbnoise/attack_model.hpp"
#include "cfbnoise/channel_model.hpp"

namespace cfbnoise {

struct SweepConfig {
  double eta_start = 1e-4;
  double eta_end = 0.05;
  double eta_step = 1e-4;
  double alpha = 0.5;
  AttackConstraints constraints;
  LinearApproxSpec approx;
  std::string out;  ///< empty means standard output

  /// Throws std::invalid_argument on a bad grid.
  void validate() const;
  /// eta_i = eta_start + i * eta_step for every point not past eta_end
  /// (with a 1e-9 relative slack so the end point survives rounding).
  [[nodiscard]] std::vector<double> grid() const;
};

struct SweepRow {
  double eta = 0.0;
  AttackParams params;
  OutcomeProbabilities probabilities;
  CapacityReport capacity;
};

/// Optimizes the attack at one point and attaches the capacity report.
[[nodiscard]] SweepRow evaluate_point(double eta, double alpha, const AttackConstraints& constraints,
                                      const LinearApproxSpec& approx);

/// All grid points, in eta order. max_threads = 0 uses every core.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepConfig& cfg, unsigned max_threads = 0);

/// Column order is fixed: eta,n_c,tau,a,p_s,p_m,p_f,p_c,p_e,p_w,c_b,c_e,c_s
[[nodiscard]] std::string csv_header();
[[nodiscard]] std::string csv_row(const SweepRow& row);
[[nodiscard]] std::string to_csv(const std::vector<SweepRow>& rows);

/// Throws std::runtime_error if the file cannot be written.
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// Line-oriented key = value reports.
[[nodiscard]] std::string format_optimize_report(const SweepRow& row,
                                                 const AttackConstraints& constraints);
[[nodiscard]] std::string format_capacity_report(const SweepRow& row, double alpha);

}  // namespace cfbnoise

#endif  // CFBNOISE_SWEEP_HPP_
