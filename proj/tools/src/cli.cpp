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

#include "cfbnoise_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "cfbnoise/monte_carlo.hpp"
#include "cfbnoise/sweep.hpp"

namespace cfbnoise::cli {
namespace {

// All options live on the top-level app so one flat config file serves
// every subcommand; subcommands fall through to them.
struct Options {
  SweepConfig sweep;
  ValidationConfig validation;
  double eta = 0.0125;
};

void add_model_options(CLI::App& app, Options& o) {
  auto& c = o.sweep.constraints;
  app.add_option("--eta", o.eta, "Channel crossover probability (optimize, capacity, validate)")
      ->capture_default_str();
  app.add_option("--eta-start", o.sweep.eta_start, "First grid point")->capture_default_str();
  app.add_option("--eta-end", o.sweep.eta_end, "Last grid point")->capture_default_str();
  app.add_option("--eta-step", o.sweep.eta_step, "Grid spacing")->capture_default_str();
  app.add_option("--alpha", o.sweep.alpha, "Avalanche rate of the cipher")->capture_default_str();
  app.add_option("--theta", c.theta, "DES encryptions available per frame")->capture_default_str();
  app.add_option("--n-max", c.n_max, "Plaintext/ciphertext pairs available")->capture_default_str();
  app.add_option("--t-m", c.t_m, "Ceiling on the key-missing probability")->capture_default_str();
  app.add_option("--t-f", c.t_f, "Ceiling on the single-trial fault probability")
      ->capture_default_str();
  app.add_option("--nc-max", c.nc_max, "Ceiling on trials per candidate")->capture_default_str();
  app.add_option("--epsilon", o.sweep.approx.epsilon, "Bias of the linear approximation")
      ->capture_default_str();
  app.add_option("--out", o.sweep.out, "Output file (default: standard output)");
}

void add_validation_options(CLI::App& app, ValidationConfig& v) {
  app.add_option("--seed", v.seed, "Seed for every random stream")->capture_default_str();
  app.add_option("--frames", v.frames, "Frames for the occupancy check")->capture_default_str();
  app.add_option("--blocks-per-frame", v.blocks_per_frame, "Blocks per simulated frame")
      ->capture_default_str();
  app.add_option("--trials", v.trials, "Samples per proportion or histogram check")
      ->capture_default_str();
  app.add_option("--avalanche-trials", v.avalanche_trials, "Samples for the avalanche rate")
      ->capture_default_str();
  app.add_option("--tv-bound", v.tv_bound, "Total-variation bound for error-weight laws")
      ->capture_default_str();
  app.add_option("--verify-n-c", v.verify_n_c, "Trials per candidate in the verification check")
      ->capture_default_str();
  app.add_option("--inflated-tau", v.inflated_tau, "Threshold for the wrong-key acceptance check")
      ->capture_default_str();
  app.add_option("--reduced-key-bits", v.reduced_key_bits, "Unknown key bits in the toy attack")
      ->capture_default_str();
  app.add_option("--reduced-advantage", v.reduced_advantage, "Advantage a in the toy attack")
      ->capture_default_str();
  app.add_option("--reduced-n-c", v.reduced_n_c, "Trials per candidate in the toy attack")
      ->capture_default_str();
  app.add_option("--reduced-tau", v.reduced_tau, "Threshold in the toy attack")
      ->capture_default_str();
  app.add_option("--synthetic-success", v.synthetic_success,
                 "Probability the toy ranking puts the key in the tested slice")
      ->capture_default_str();
  app.add_option("--attack-trials", v.attack_trials, "Trials of the toy attack")
      ->capture_default_str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("failed writing " + path);
}

void require_eta(double eta) {
  if (!(eta >= 0.0 && eta < 0.5)) {
    throw std::invalid_argument("--eta must lie in [0, 0.5)");
  }
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto rows = run_sweep(o.sweep);
  if (o.sweep.out.empty()) {
    out << to_csv(rows);
  } else {
    write_csv(rows, o.sweep.out);
  }
  return kExitOk;
}

int cmd_optimize(const Options& o, std::ostream& out) {
  require_eta(o.eta);
  const auto row = evaluate_point(o.eta, o.sweep.alpha, o.sweep.constraints, o.sweep.approx);
  emit(format_optimize_report(row, o.sweep.constraints), o.sweep.out, out);
  return kExitOk;
}

int cmd_capacity(const Options& o, std::ostream& out) {
  require_eta(o.eta);
  const auto row = evaluate_point(o.eta, o.sweep.alpha, o.sweep.constraints, o.sweep.approx);
  emit(format_capacity_report(row, o.sweep.alpha), o.sweep.out, out);
  return kExitOk;
}

int cmd_validate(Options o, std::ostream& out) {
  o.validation.eta = o.eta;
  o.validation.alpha = o.sweep.alpha;
  const auto report = run_validation(o.validation);
  emit(report.to_text(), o.sweep.out, out);
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Noisy DES-CFB attack and secrecy-capacity model", "cfbnoise"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value file using the long option names; flags win");
  app.allow_config_extras(false);
  add_model_options(app, o);
  add_validation_options(app, o.validation);

  auto* sweep = app.add_subcommand("sweep", "Re-optimize the attack over an eta grid, write CSV");
  auto* optimize = app.add_subcommand("optimize", "Optimal attack parameters at one eta");
  auto* capacity = app.add_subcommand("capacity", "Channel and secrecy capacities at one eta");
  auto* validate = app.add_subcommand("validate", "Monte Carlo checks of the analytic models");
  for (auto* sub : {sweep, optimize, capacity, validate}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return cmd_sweep(o, out);
    if (*optimize) return cmd_optimize(o, out);
    if (*capacity) return cmd_capacity(o, out);
    return cmd_validate(o, out);
  } catch (const std::exception& e) {
    err << "cfbnoise: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cfbnoise::cli
