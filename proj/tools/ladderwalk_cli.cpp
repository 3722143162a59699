// Copyright 2026 The ladderwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: line walks, ladder walks, analytic sweeps, and the
// walk-pattern table check. Exit codes: 0 success, 1 usage error,
// 2 table1 check failed, 3 numeric invariant violated.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ladderwalk/angle_parse.hpp"
#include "ladderwalk/dataset.hpp"
#include "ladderwalk/experiments.hpp"

namespace fs = std::filesystem;
using namespace ladderwalk;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitNumeric = 3;

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> alpha, beta, gamma, gamma_y;
  std::optional<long> steps, half_width;
  std::optional<std::string> theta, phi;
  std::optional<std::string> alpha_grid, beta_grid, gamma_grid;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
  bool final_only = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON file with default settings (flags override it)");
  cmd->add_option("--alpha", f.alpha, "first split-step coin angle (radians or e.g. -1/4pi)");
  cmd->add_option("--beta", f.beta, "second split-step coin angle");
  cmd->add_option("--gamma", f.gamma, "line-walk coin angle");
  cmd->add_option("--gamma-y", f.gamma_y, "rung-direction coin angle (default -pi/2)");
  cmd->add_option("--steps", f.steps, "number of steps");
  cmd->add_option("--half-width", f.half_width, "lattice half-width (default steps + 2)");
  cmd->add_option("--initial-theta", f.theta, "initial coin polar angle on the Bloch sphere");
  cmd->add_option("--initial-phi", f.phi, "initial coin azimuth on the Bloch sphere");
  cmd->add_option("--out", f.out, "output path (stdout when omitted)");
  cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

Grid parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw std::invalid_argument("grid must look like start:stop:count, got '" + text + "'");
  }
  Grid g;
  g.start = parse_angle(text.substr(0, a));
  g.stop = parse_angle(text.substr(a + 1, b - a - 1));
  std::size_t used = 0;
  const auto count_text = text.substr(b + 1);
  g.count = std::stol(count_text, &used);
  if (used != count_text.size() || g.count < 1) {
    throw std::invalid_argument("grid count must be a positive integer in '" + text + "'");
  }
  return g;
}

double json_angle(const nlohmann::json& v) {
  return v.is_string() ? parse_angle(v.get<std::string>()) : v.get<double>();
}

Grid json_grid(const nlohmann::json& v) {
  if (v.is_string()) return parse_grid(v.get<std::string>());
  return {json_angle(v.at("start")), json_angle(v.at("stop")), v.at("count").get<long>()};
}

struct Settings {
  ExperimentConfig cfg;
  std::optional<std::string> out;
  std::string format = "csv";
};

Settings resolve(const Flags& f) {
  Settings s;
  auto& c = s.cfg;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw std::invalid_argument("cannot open config file '" + *f.config + "'");
    const auto j = nlohmann::json::parse(in);
    if (j.contains("alpha")) c.alpha = json_angle(j["alpha"]);
    if (j.contains("beta")) c.beta = json_angle(j["beta"]);
    if (j.contains("gamma")) c.gamma = json_angle(j["gamma"]);
    if (j.contains("gamma_y")) c.gamma_y = json_angle(j["gamma_y"]);
    if (j.contains("steps")) c.steps = j["steps"].get<long>();
    if (j.contains("half_width")) c.half_width = j["half_width"].get<long>();
    if (j.contains("initial_theta")) c.initial_theta = json_angle(j["initial_theta"]);
    if (j.contains("initial_phi")) c.initial_phi = json_angle(j["initial_phi"]);
    if (j.contains("alpha_grid")) c.alpha_grid = json_grid(j["alpha_grid"]);
    if (j.contains("beta_grid")) c.beta_grid = json_grid(j["beta_grid"]);
    if (j.contains("gamma_grid")) c.gamma_grid = json_grid(j["gamma_grid"]);
    if (j.contains("threads")) c.threads = j["threads"].get<unsigned>();
    if (j.contains("final_only")) c.all_steps = !j["final_only"].get<bool>();
    if (j.contains("out")) s.out = j["out"].get<std::string>();
    if (j.contains("format")) s.format = j["format"].get<std::string>();
  }
  if (f.alpha) c.alpha = parse_angle(*f.alpha);
  if (f.beta) c.beta = parse_angle(*f.beta);
  if (f.gamma) c.gamma = parse_angle(*f.gamma);
  if (f.gamma_y) c.gamma_y = parse_angle(*f.gamma_y);
  if (f.steps) c.steps = *f.steps;
  if (f.half_width) c.half_width = *f.half_width;
  if (f.theta) c.initial_theta = parse_angle(*f.theta);
  if (f.phi) c.initial_phi = parse_angle(*f.phi);
  if (f.alpha_grid) c.alpha_grid = parse_grid(*f.alpha_grid);
  if (f.beta_grid) c.beta_grid = parse_grid(*f.beta_grid);
  if (f.gamma_grid) c.gamma_grid = parse_grid(*f.gamma_grid);
  if (f.threads) c.threads = *f.threads;
  if (f.final_only) c.all_steps = false;
  if (f.out) s.out = *f.out;
  if (f.format) {
    s.format = *f.format;
  } else if (s.out && fs::path(*s.out).extension() == ".json") {
    s.format = "json";
  }
  if (s.format != "csv" && s.format != "json") {
    throw std::invalid_argument("format must be csv or json");
  }
  c.validate();
  return s;
}

void write_dataset(const Dataset& ds, const Settings& s) {
  if (s.format == "json") {
    if (!s.out) {
      write_json(ds, std::cout);
      return;
    }
    std::ofstream os(*s.out);
    if (!os) throw std::invalid_argument("cannot write '" + *s.out + "'");
    write_json(ds, os);
    return;
  }
  if (!s.out) {
    for (std::size_t i = 0; i < ds.tables.size(); ++i) {
      if (i) std::cout << '\n';
      std::cout << "# " << ds.tables[i].name << '\n';
      write_csv(ds.tables[i], std::cout);
    }
    return;
  }
  // First table goes to the requested path, the rest next to it as <stem>_<table>.csv.
  const fs::path base(*s.out);
  for (std::size_t i = 0; i < ds.tables.size(); ++i) {
    fs::path p = base;
    if (i) p = base.parent_path() / (base.stem().string() + "_" + ds.tables[i].name + ".csv");
    std::ofstream os(p);
    if (!os) throw std::invalid_argument("cannot write '" + p.string() + "'");
    write_csv(ds.tables[i], os);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time quantum walks on a line and on a two-rail ladder"};
  app.require_subcommand(1);

  Flags walk_f, ladder_f, sweep_f, table_f;
  auto* walk = app.add_subcommand("walk1d", "conventional walk on a line");
  add_common(walk, walk_f);
  walk->add_flag("--final-only", walk_f.final_only, "emit only the last step's distribution");

  auto* ladder = app.add_subcommand("ladder", "split-step/conventional walk on the ladder");
  add_common(ladder, ladder_f);
  ladder->add_flag("--final-only", ladder_f.final_only, "emit only the last step's distribution");

  auto* sweep = app.add_subcommand("sweep", "analytic quantities over an (alpha, beta) grid");
  add_common(sweep, sweep_f);
  sweep->add_option("--alpha-grid", sweep_f.alpha_grid, "start:stop:count (default: --alpha only)");
  sweep->add_option("--beta-grid", sweep_f.beta_grid, "start:stop:count (default -pi:pi:65)");
  sweep->add_option("--gamma-grid", sweep_f.gamma_grid,
                    "coin-angle grid for the single-walker table (default 0:pi:65)");
  sweep->add_option("--threads", sweep_f.threads, "worker threads (default: all cores)");

  auto* table = app.add_subcommand("table1", "check the walk-pattern table at alpha = -pi/4");
  add_common(table, table_f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*walk) {
      const auto s = resolve(walk_f);
      write_dataset(run_walk1d(s.cfg), s);
    } else if (*ladder) {
      const auto s = resolve(ladder_f);
      write_dataset(run_ladder(s.cfg), s);
    } else if (*sweep) {
      const auto s = resolve(sweep_f);
      write_dataset(run_sweep(s.cfg), s);
    } else if (*table) {
      const auto s = resolve(table_f);
      const auto report = run_table1();
      Table t{"table1", {"check", "passed", "detail"}, {}};
      for (const auto& c : report.checks) {
        std::cerr << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
        t.add_row({c.name, c.passed ? 1L : 0L, c.detail});
      }
      if (s.out || s.format == "json") write_dataset({"table1", {std::move(t)}}, s);
      return report.all_passed() ? 0 : kExitCheckFailed;
    }
  } catch (const NumericInvariantError& e) {
    std::cerr << "numeric invariant violated: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const LatticeOverflow& e) {
    std::cerr << "lattice overflow: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
