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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cfbnoise_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cfbnoise");
  std::ostringstream out, err;
  const int code = cfbnoise::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(CFBNOISE_TEST_TMPDIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::vector<std::string> kSmallValidation = {
    "--frames", "1", "--blocks-per-frame", "1000", "--trials", "1000",
    "--avalanche-trials", "1000", "--attack-trials", "1000", "--tv-bound", "0.15"};

}  // namespace

TEST_CASE("optimize prints the operating point") {
  const auto r = run({"optimize", "--eta", "0.0125"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n_c = 20\ntau = 7\na = 27\n") != std::string::npos);
  CHECK(r.out.find("budget = ") != std::string::npos);
  const auto zero = run({"optimize", "--eta", "0"});
  CHECK(zero.out.find("n_c = 1\ntau = 0\n") != std::string::npos);
}

TEST_CASE("bad input exits with a usage error") {
  CHECK(run({"optimize", "--eta", "0.5"}).code == cfbnoise::cli::kExitUsage);
  CHECK(run({"optimize", "--eta", "abc"}).code == cfbnoise::cli::kExitUsage);
  CHECK(run({}).code == cfbnoise::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cfbnoise::cli::kExitUsage);
  const auto r = run({"sweep", "--eta-start", "0.02", "--eta-end", "0.01"});
  CHECK(r.code == cfbnoise::cli::kExitUsage);
  CHECK(r.err.find("invalid grid") != std::string::npos);
  CHECK(run({"sweep", "--out", "/nonexistent-dir/a.csv"}).code == cfbnoise::cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep writes the CSV") {
  const auto path = tmp("cli_sweep.csv");
  const auto r = run({"sweep", "--eta-start", "0.001", "--eta-end", "0.003", "--eta-step",
                      "0.001", "--out", path});
  CHECK(r.code == 0);
  const auto csv = slurp(path);
  CHECK(csv.rfind("eta,n_c,tau,a,p_s,p_m,p_f,p_c,p_e,p_w,c_b,c_e,c_s\n0.001,5,3,23,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  const auto again = run({"sweep", "--eta-start", "0.001", "--eta-end", "0.003", "--eta-step",
                          "0.001"});
  CHECK(again.out == csv);
}

TEST_CASE("config file values are overridden by flags") {
  const auto path = tmp("cli.conf");
  {
    std::ofstream f(path);
    f << "# attack model\neta = 0.001\nt-m = 1e-5\n";
  }
  const auto from_file = run({"optimize", "--config", path});
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("n_c = 5\n") != std::string::npos);
  const auto flag_wins = run({"optimize", "--config", path, "--eta", "0.0125"});
  CHECK(flag_wins.out.find("n_c = 20\n") != std::string::npos);
  {
    std::ofstream f(path);
    f << "no-such-option = 3\n";
  }
  CHECK(run({"optimize", "--config", path}).code == cfbnoise::cli::kExitUsage);
}

TEST_CASE("capacity report") {
  const auto r = run({"capacity", "--eta", "0.0125"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c_s = 0.3442") != std::string::npos);
}

TEST_CASE("validate is byte-identical per seed and exits zero when all pass") {
  auto args = kSmallValidation;
  args.insert(args.begin(), "validate");
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto zero = args;
  zero.insert(zero.end(), {"--eta", "0"});
  CHECK(run(zero).code == 0);
  auto other = args;
  other.insert(other.end(), {"--seed", "9"});
  CHECK(run(other).out != a.out);
}

TEST_CASE("validate exits nonzero when a check fails") {
  auto args = kSmallValidation;
  args.insert(args.begin(), "validate");
  // Sampled histograms never come that close to the exact laws.
  args.back() = "1e-9";
  const auto r = run(args);
  CHECK(r.code == cfbnoise::cli::kExitCheckFailed);
  CHECK(r.out.find("FAIL") != std::string::npos);
}
