// Copyright 2026 The iqwalk Authors
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

// iqwalk: command-line front end.
//
//   iqwalk evolve  --graph cycle --sites 4 --coin pi/2,0,pi/2 --steps 24
//   iqwalk metric  --metric closeness --target graph --coin pi/2,0,pi/2 --steps 100
//   iqwalk sweep   --target graph --graph cycle --jobs 4
//   iqwalk figure  fig7 --out figures/
//
// Exit status: 0 success, 1 usage or I/O error, 2 numeric contract violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "iqwalk/angle.hpp"
#include "iqwalk/conditioning.hpp"
#include "iqwalk/errors.hpp"
#include "iqwalk/experiment_runner.hpp"
#include "iqwalk/walk_engine.hpp"

namespace {

using namespace iqwalk;

struct CommonOptions {
  std::string graph = "cycle";
  std::size_t sites = 4;
  std::string coin = "0,0,0";
  std::size_t steps = 0;
  std::string out = "-";
  std::string format = "csv";
  std::size_t jobs = 1;
  std::size_t max_sites = kDefaultMaxSites;
  std::string initial;
};

void add_walk_options(CLI::App* cmd, CommonOptions& o, std::size_t default_steps) {
  o.steps = default_steps;
  cmd->add_option("--graph", o.graph, "Graph topology")->check(CLI::IsMember({"path", "cycle", "linear", "cyclic"}))
      ->capture_default_str();
  cmd->add_option("--sites", o.sites, "Number of sites n")->capture_default_str();
  cmd->add_option("--coin", o.coin, "Coin angles THETA,PHI1,PHI2 (decimal or k*pi/m)")->capture_default_str();
  cmd->add_option("--steps", o.steps, "Number of walk steps T")->capture_default_str();
  cmd->add_option("--max-sites", o.max_sites, "Ceiling on the site count")->capture_default_str();
  cmd->add_option("--initial", o.initial, "JSON file with the initial amplitudes (as written by evolve)");
}

void add_output_options(CLI::App* cmd, CommonOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--out", o.out, "Output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

CoinParams parse_coin(const std::string& text) {
  const auto v = parse_angle_list(text);
  if (v.size() != 3) throw UsageError("--coin needs exactly three angles THETA,PHI1,PHI2");
  return {v[0], v[1], v[2]};
}

// Reads {"amplitudes": [[re, im], ...]} in walk-space order.
PureState load_initial(const std::string& path, const GraphTopology& topology) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read initial state '" + path + "'");
  const nlohmann::json j = nlohmann::json::parse(f, nullptr, false);
  if (j.is_discarded() || !j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw UsageError("initial state '" + path + "' needs an \"amplitudes\" array of [re, im] pairs");
  const auto& amps = j["amplitudes"];
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto& a = amps[i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
      throw UsageError("initial state entry " + std::to_string(i) + " is not an [re, im] pair");
    v[static_cast<Eigen::Index>(i)] = Complex(a[0].get<double>(), a[1].get<double>());
  }
  return PureState{std::move(v), walk_shape(topology)};
}

WalkConfig make_config(const CommonOptions& o) {
  WalkConfig cfg;
  cfg.topology = {parse_graph_kind(o.graph), o.sites};
  cfg.coin = parse_coin(o.coin);
  cfg.steps = o.steps;
  cfg.max_sites = o.max_sites;
  cfg.topology.validate(cfg.max_sites);
  if (!o.initial.empty()) cfg.initial = load_initial(o.initial, cfg.topology);
  return cfg;
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path + "'");
  fn(f);
  f.flush();
  if (!f) throw Error("failed writing '" + path + "'");
}

void run_evolve(const CommonOptions& o) {
  const WalkConfig cfg = make_config(o);
  const PureState s = evolve(cfg);
  with_output(o.out, [&](std::ostream& out) {
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["graph"] = to_string(cfg.topology.kind);
      j["n"] = cfg.topology.sites;
      j["coin"] = {cfg.coin.theta, cfg.coin.phi1, cfg.coin.phi2};
      j["steps"] = cfg.steps;
      j["shape"] = s.shape.dims();
      j["norm"] = s.norm();
      auto& amps = j["amplitudes"] = nlohmann::ordered_json::array();
      for (const Complex& a : s.amplitudes) amps.push_back({a.real(), a.imag()});
      out << j.dump(2) << '\n';
    } else {
      out << "# iqwalk v1, state, graph=" << to_string(cfg.topology.kind) << ", n=" << cfg.topology.sites
          << ", theta=" << format_number(cfg.coin.theta) << ", phi1=" << format_number(cfg.coin.phi1)
          << ", phi2=" << format_number(cfg.coin.phi2) << ", steps=" << cfg.steps << '\n';
      for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
        out << i << ',' << format_number(s.amplitudes[i].real()) << ',' << format_number(s.amplitudes[i].imag())
            << '\n';
    }
  });
}

std::optional<CoinProjection> parse_projection(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto v = parse_angle_list(text);
  if (v.size() != 2) throw UsageError("--postselect needs MU,NU");
  return CoinProjection{v[0], v[1]};
}

std::optional<ReferenceKind> parse_target(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_reference_kind(text);
}

void run_metric(const CommonOptions& o, const std::string& metric_name, const std::string& postselect,
                const std::string& target) {
  const WalkConfig cfg = make_config(o);
  const MetricRequest metric = parse_metric(metric_name, parse_projection(postselect), parse_target(target));
  const MetricSeries series = run_metric_series(cfg, metric);
  with_output(o.out, [&](std::ostream& out) {
    if (o.format == "json") write_series_json(out, series, outcome_probabilities(cfg, metric));
    else write_series_csv(out, series);
  });
}

void run_sweep_cmd(const CommonOptions& o, const std::string& target, const std::string& thetas,
                   const std::string& phi1s, const std::string& phi2s) {
  const GraphTopology topology{parse_graph_kind(o.graph), o.sites};
  topology.validate(o.max_sites);
  SweepSpec spec = SweepSpec::default_grid(topology, parse_reference_kind(target));
  spec.steps = o.steps;
  if (!thetas.empty()) spec.thetas = parse_angle_list(thetas);
  if (!phi1s.empty()) spec.phi1s = parse_angle_list(phi1s);
  if (!phi2s.empty()) spec.phi2s = parse_angle_list(phi2s);
  const SweepResult r = run_sweep(spec, o.jobs);
  with_output(o.out, [&](std::ostream& out) {
    if (o.format == "json") {
      write_sweep_json(out, spec, r);
      return;
    }
    out << "# iqwalk v1, sweep, target=" << to_string(spec.target) << ", graph=" << to_string(topology.kind)
        << ", n=" << topology.sites << ", steps=" << spec.steps << ", best=" << format_number(r.best) << '\n';
    out << "theta,phi1,phi2,t,value\n";
    for (const SweepPoint& p : r.ties)
      out << format_number(p.coin.theta) << ',' << format_number(p.coin.phi1) << ',' << format_number(p.coin.phi2)
          << ',' << p.t << ',' << format_number(p.value) << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interacting quantum walk simulator and entanglement diagnostics", "iqwalk"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  CommonOptions evolve_opts, metric_opts, sweep_opts, figure_opts;

  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve the walk and print the final state");
  add_walk_options(evolve_cmd, evolve_opts, 0);
  add_output_options(evolve_cmd, evolve_opts, "json");

  std::string metric_name, postselect, metric_target;
  auto* metric_cmd = app.add_subcommand("metric", "Time series of one diagnostic for t = 0..T");
  add_walk_options(metric_cmd, metric_opts, 100);
  add_output_options(metric_cmd, metric_opts, "csv");
  metric_cmd->add_option("--metric", metric_name,
                         "entropy:<P|C|G|PC|PG|CG>, logneg, concurrence, concurrence_postselected, closeness")
      ->required();
  metric_cmd->add_option("--postselect", postselect, "Coin projection MU,NU for concurrence_postselected");
  metric_cmd->add_option("--target", metric_target, "Reference state for closeness")
      ->check(CLI::IsMember({"ghz", "w", "graph"}));

  std::string sweep_target = "graph", theta_grid, phi1_grid, phi2_grid;
  auto* sweep_cmd = app.add_subcommand("sweep", "Maximize closeness over a coin grid and t = 1..T");
  add_walk_options(sweep_cmd, sweep_opts, 100);
  add_output_options(sweep_cmd, sweep_opts, "json");
  sweep_cmd->add_option("--target", sweep_target, "Reference state")
      ->check(CLI::IsMember({"ghz", "w", "graph"}))
      ->capture_default_str();
  sweep_cmd->add_option("--theta-grid", theta_grid, "Comma-separated theta values (default k*pi/20, k=0..20)");
  sweep_cmd->add_option("--phi1-grid", phi1_grid, "Comma-separated phi1 values (default 0)");
  sweep_cmd->add_option("--phi2-grid", phi2_grid, "Comma-separated phi2 values (default k*pi/20, k=0..20)");
  sweep_cmd->add_option("--jobs", sweep_opts.jobs, "Worker threads")->capture_default_str();

  std::string figure_id;
  figure_opts.out = "figures";
  figure_opts.steps = 100;
  auto* figure_cmd = app.add_subcommand("figure", "Write the CSV curves and manifest of one figure");
  figure_cmd->add_option("id", figure_id, "fig2 .. fig7")->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}));
  figure_cmd->add_option("--out", figure_opts.out, "Output directory")->capture_default_str();
  figure_cmd->add_option("--steps", figure_opts.steps, "Number of walk steps T")->capture_default_str();
  figure_cmd->add_option("--jobs", figure_opts.jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*evolve_cmd) {
      run_evolve(evolve_opts);
    } else if (*metric_cmd) {
      run_metric(metric_opts, metric_name, postselect, metric_target);
    } else if (*sweep_cmd) {
      run_sweep_cmd(sweep_opts, sweep_target, theta_grid, phi1_grid, phi2_grid);
    } else if (*figure_cmd) {
      const FigureOutput out = reproduce_figure(parse_figure_id(figure_id), figure_opts.out, figure_opts.jobs,
                                                figure_opts.steps);
      for (const auto& f : out.files) std::cout << f.string() << '\n';
    }
  } catch (const ContractError& e) {
    std::cerr << "iqwalk: numeric contract violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "iqwalk: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
