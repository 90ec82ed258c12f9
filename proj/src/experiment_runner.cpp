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

#include "iqwalk/experiment_runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "iqwalk/angle.hpp"
#include "iqwalk/errors.hpp"

namespace iqwalk {

using std::numbers::pi;

const std::array<CoinParams, 4> kEntropyFigureCoins{{
    {3 * pi / 20, 0, 7 * pi / 20},
    {pi / 5, 0, pi / 5},
    {pi / 4, 0, 2 * pi / 5},
    {2 * pi / 5, 0, 3 * pi / 10},
}};

const std::array<CoinParams, 4> kClusterFigureCoins{{
    {pi / 10, 0, 0},
    {pi / 2, 0, pi / 2},
    {pi / 20, 0, 0},
    {7 * pi / 20, 0, 0},
}};

// Metrics -------------------------------------------------------------------

std::string MetricRequest::name() const {
  switch (kind) {
    case MetricKind::Entropy: return "entropy:" + side;
    case MetricKind::LogNegativity: return "logneg";
    case MetricKind::Concurrence: return "concurrence";
    case MetricKind::ConcurrencePostselected:
      return "concurrence_postselected:mu=" + format_angle(projection->mu) +
             ":nu=" + format_angle(projection->nu);
    case MetricKind::Closeness: return "closeness:" + std::string(to_string(*target));
  }
  return "?";
}

MetricRequest parse_metric(std::string_view name, std::optional<CoinProjection> projection,
                           std::optional<ReferenceKind> target) {
  MetricRequest m;
  if (name.starts_with("entropy")) {
    m.kind = MetricKind::Entropy;
    std::string_view side = name.substr(7);
    if (side.empty()) side = ":G";
    if (side.front() != ':') throw UsageError("unknown metric '" + std::string(name) + "'");
    m.side = std::string(side.substr(1));
    side_subsystems(m.side, 2);  // validates the letters
  } else if (name == "logneg") {
    m.kind = MetricKind::LogNegativity;
  } else if (name == "concurrence") {
    m.kind = MetricKind::Concurrence;
  } else if (name == "concurrence_postselected") {
    if (!projection) throw UsageError("concurrence_postselected needs a coin projection (--postselect MU,NU)");
    m.kind = MetricKind::ConcurrencePostselected;
    m.projection = projection;
  } else if (name == "closeness") {
    if (!target) throw UsageError("closeness needs a reference state (--target ghz|w|graph)");
    m.kind = MetricKind::Closeness;
    m.target = target;
  } else {
    throw UsageError("unknown metric '" + std::string(name) +
                     "' (expected entropy:<side>, logneg, concurrence, concurrence_postselected, closeness)");
  }
  return m;
}

std::vector<std::size_t> side_subsystems(std::string_view side, std::size_t sites) {
  bool p = false, c = false, g = false;
  for (char ch : side) {
    bool* slot = ch == 'P' ? &p : ch == 'C' ? &c : ch == 'G' ? &g : nullptr;
    if (!slot || *slot) throw UsageError("bad bipartition side '" + std::string(side) + "' (letters from P, C, G)");
    *slot = true;
  }
  if (!(p || c || g) || (p && c && g))
    throw UsageError("bipartition side must be a non-empty proper subset of PCG");
  std::vector<std::size_t> out;
  if (p) out.push_back(kPositionSubsystem);
  if (c) out.push_back(kCoinSubsystem);
  if (g)
    for (std::size_t i = 0; i < sites; ++i) out.push_back(kFirstVertexSubsystem + i);
  return out;
}

namespace {

std::string conditioning_label(const MetricRequest& m) {
  if (m.kind != MetricKind::ConcurrencePostselected) return "none";
  return "coin_projection(mu=" + format_angle(m.projection->mu) + ";nu=" + format_angle(m.projection->nu) + ")";
}

// Evaluates one metric on one state; reference projector is precomputed.
class MetricEvaluator {
 public:
  MetricEvaluator(const WalkConfig& cfg, const MetricRequest& m) : metric_(m), sites_(cfg.topology.sites) {
    if (m.kind == MetricKind::Entropy) keep_ = side_subsystems(m.side, sites_);
    if (m.kind == MetricKind::Closeness) reference_ = projector(reference_state(*m.target, cfg.topology));
  }

  // Returns (value, outcome probability or 1).
  std::pair<double, double> operator()(const PureState& s) const {
    switch (metric_.kind) {
      case MetricKind::Entropy:
        return {von_neumann_entropy(reduced_density(s.amplitudes, s.shape, keep_)), 1.0};
      case MetricKind::LogNegativity: {
        const ComplexMatrix pc = reduced_density(s.amplitudes, s.shape, {kPositionSubsystem, kCoinSubsystem});
        return {log_negativity(pc, SubsystemShape{sites_, 2}, {1}), 1.0};
      }
      case MetricKind::Concurrence:
        return {n_concurrence(unconditioned_vertex_state(s).matrix, sites_), 1.0};
      case MetricKind::ConcurrencePostselected: {
        const double p = projection_probability(s, *metric_.projection);
        if (p < kZeroProbability) return {0.0, p};
        const ConditionalState cond = postselect_coin(s, *metric_.projection);
        return {n_concurrence(cond.vertex.matrix, sites_), cond.probability};
      }
      case MetricKind::Closeness:
        return {closeness(unconditioned_vertex_state(s).matrix, reference_), 1.0};
    }
    throw UsageError("unknown metric");
  }

 private:
  MetricRequest metric_;
  std::size_t sites_;
  std::vector<std::size_t> keep_;
  ComplexMatrix reference_;
};

MetricSeries empty_series(const WalkConfig& cfg, const MetricRequest& m) {
  MetricSeries out;
  out.metric = m.name();
  out.topology = cfg.topology;
  out.coin = cfg.coin;
  out.conditioning = conditioning_label(m);
  out.times.reserve(cfg.steps + 1);
  out.values.reserve(cfg.steps + 1);
  return out;
}

}  // namespace

MetricSeries run_metric_series(const WalkConfig& cfg, const MetricRequest& metric) {
  cfg.topology.validate(cfg.max_sites);
  const MetricEvaluator eval(cfg, metric);
  MetricSeries out = empty_series(cfg, metric);
  for_each_step(cfg, [&](std::size_t t, const PureState& s) {
    out.times.push_back(t);
    out.values.push_back(eval(s).first);
  });
  return out;
}

std::vector<double> outcome_probabilities(const WalkConfig& cfg, const MetricRequest& metric) {
  std::vector<double> out;
  if (metric.kind != MetricKind::ConcurrencePostselected) return out;
  for_each_step(cfg, [&](std::size_t, const PureState& s) {
    out.push_back(projection_probability(s, *metric.projection));
  });
  return out;
}

// Sweeps --------------------------------------------------------------------

SweepSpec SweepSpec::default_grid(GraphTopology topology, ReferenceKind target) {
  SweepSpec s;
  for (int k = 0; k <= 20; ++k) {
    s.thetas.push_back(k * pi / 20);
    s.phi2s.push_back(k * pi / 20);
  }
  s.phi1s = {0.0};
  s.topology = topology;
  s.steps = 100;
  s.target = target;
  return s;
}

void SweepSpec::validate() const {
  if (thetas.empty() || phi1s.empty() || phi2s.empty()) throw UsageError("sweep grids must be non-empty");
  if (steps < 1) throw UsageError("sweep needs at least one time step");
  topology.validate();
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(mu);
            if (i < failed_at) {
              failed_at = i;
              failure = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

auto sweep_key(const SweepPoint& p) { return std::tie(p.coin.theta, p.coin.phi1, p.coin.phi2, p.t); }

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, std::size_t jobs) {
  spec.validate();
  std::vector<CoinParams> coins;
  for (double th : spec.thetas)
    for (double p1 : spec.phi1s)
      for (double p2 : spec.phi2s) coins.push_back({th, p1, p2});

  const MetricRequest metric = parse_metric("closeness", std::nullopt, spec.target);
  std::vector<MetricSeries> series(coins.size());
  parallel_for(coins.size(), jobs, [&](std::size_t i) {
    WalkConfig cfg;
    cfg.topology = spec.topology;
    cfg.coin = coins[i];
    cfg.steps = spec.steps;
    series[i] = run_metric_series(cfg, metric);
  });

  // Two passes keep the reduction independent of evaluation order: the
  // maximum first, then every point within tolerance of it.
  double best = -std::numeric_limits<double>::infinity();
  for (const MetricSeries& s : series)
    for (std::size_t t = 1; t < s.values.size(); ++t) best = std::max(best, s.values[t]);

  SweepResult out;
  out.best = best;
  for (std::size_t i = 0; i < coins.size(); ++i)
    for (std::size_t t = 1; t < series[i].values.size(); ++t)
      if (series[i].values[t] >= best - kSweepTieTolerance) out.ties.push_back({coins[i], t, series[i].values[t]});
  std::sort(out.ties.begin(), out.ties.end(),
            [](const SweepPoint& a, const SweepPoint& b) { return sweep_key(a) < sweep_key(b); });
  out.argmax = out.ties.front();
  if (spec.keep_table) out.table = std::move(series);
  return out;
}

// Output --------------------------------------------------------------------

void write_series_csv(std::ostream& out, const MetricSeries& s) {
  out << "# iqwalk v1, metric=" << s.metric << ", graph=" << to_string(s.topology.kind)
      << ", n=" << s.topology.sites << ", theta=" << format_number(s.coin.theta)
      << ", phi1=" << format_number(s.coin.phi1) << ", phi2=" << format_number(s.coin.phi2) << '\n';
  for (std::size_t i = 0; i < s.values.size(); ++i) out << s.times[i] << ',' << format_number(s.values[i]) << '\n';
}

namespace {

nlohmann::ordered_json coin_json(const CoinParams& c) {
  return {{"theta", c.theta},
          {"phi1", c.phi1},
          {"phi2", c.phi2},
          {"label", format_angle(c.theta) + "," + format_angle(c.phi1) + "," + format_angle(c.phi2)}};
}

nlohmann::ordered_json series_json(const MetricSeries& s) {
  nlohmann::ordered_json j;
  j["metric"] = s.metric;
  j["graph"] = to_string(s.topology.kind);
  j["n"] = s.topology.sites;
  j["coin"] = coin_json(s.coin);
  j["conditioning"] = s.conditioning;
  j["t"] = s.times;
  j["value"] = s.values;
  return j;
}

nlohmann::ordered_json point_json(const SweepPoint& p) {
  return {{"coin", coin_json(p.coin)}, {"t", p.t}, {"value", p.value}};
}

nlohmann::ordered_json sweep_json(const SweepSpec& spec, const SweepResult& r) {
  nlohmann::ordered_json j;
  j["target"] = to_string(spec.target);
  j["graph"] = to_string(spec.topology.kind);
  j["n"] = spec.topology.sites;
  j["steps"] = spec.steps;
  j["grid"] = {{"theta", spec.thetas}, {"phi1", spec.phi1s}, {"phi2", spec.phi2s}};
  j["best"] = r.best;
  j["argmax"] = point_json(r.argmax);
  auto& ties = j["ties"] = nlohmann::ordered_json::array();
  for (const SweepPoint& p : r.ties) ties.push_back(point_json(p));
  return j;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  return f;
}

void finish_output(std::ofstream& f, const std::filesystem::path& path) {
  f.flush();
  if (!f) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

void write_series_json(std::ostream& out, const MetricSeries& s, const std::vector<double>& probabilities) {
  nlohmann::ordered_json j = series_json(s);
  if (!probabilities.empty()) j["probability"] = probabilities;
  out << j.dump(2) << '\n';
}

void write_sweep_json(std::ostream& out, const SweepSpec& spec, const SweepResult& result) {
  out << sweep_json(spec, result).dump(2) << '\n';
}

// Figures -------------------------------------------------------------------

FigureId parse_figure_id(std::string_view text) {
  static constexpr std::array<std::string_view, 6> names{"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (text == names[i]) return static_cast<FigureId>(i);
  throw UsageError("unknown figure '" + std::string(text) + "' (expected fig2..fig7)");
}

std::string_view to_string(FigureId id) {
  static constexpr std::array<std::string_view, 6> names{"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
  return names[static_cast<std::size_t>(id)];
}

namespace {

struct Curve {
  std::string file;
  WalkConfig cfg;
  MetricRequest metric;
};

std::string slug(std::string_view metric_name) {
  std::string out;
  for (char ch : metric_name) out += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return out;
}

WalkConfig figure_config(GraphKind kind, const CoinParams& coin, std::size_t steps) {
  WalkConfig cfg;
  cfg.topology = {kind, 4};
  cfg.coin = coin;
  cfg.steps = steps;
  return cfg;
}

void add_curves(std::vector<Curve>& curves, std::string_view fig, GraphKind kind,
                const std::array<CoinParams, 4>& coins, const MetricRequest& metric, std::size_t steps) {
  for (std::size_t i = 0; i < coins.size(); ++i) {
    std::string file = std::string(fig) + "_" + std::string(to_string(kind)) + "_coin" + std::to_string(i + 1) +
                       "_" + slug(metric.name()) + ".csv";
    curves.push_back({std::move(file), figure_config(kind, coins[i], steps), metric});
  }
}

std::vector<Curve> figure_curves(FigureId id, std::size_t steps) {
  std::vector<Curve> curves;
  const std::string_view fig = to_string(id);
  const std::array<GraphKind, 2> both{GraphKind::Cycle, GraphKind::Path};
  switch (id) {
    case FigureId::Fig2:
      for (GraphKind kind : both)
        for (const char* side : {"G", "P", "C"})
          add_curves(curves, fig, kind, kEntropyFigureCoins, parse_metric(std::string("entropy:") + side), steps);
      break;
    case FigureId::Fig3:
      for (GraphKind kind : both) add_curves(curves, fig, kind, kEntropyFigureCoins, parse_metric("logneg"), steps);
      break;
    case FigureId::Fig4:
      add_curves(curves, fig, GraphKind::Path, kEntropyFigureCoins, parse_metric("concurrence"), steps);
      break;
    case FigureId::Fig5:
      for (double mu : {0.0, pi / 2})
        add_curves(curves, fig, GraphKind::Path, kEntropyFigureCoins,
                   parse_metric("concurrence_postselected", CoinProjection{mu, 0.0}), steps);
      break;
    case FigureId::Fig7:
      add_curves(curves, fig, GraphKind::Cycle, kClusterFigureCoins,
                 parse_metric("closeness", std::nullopt, ReferenceKind::Graph), steps);
      break;
    case FigureId::Fig6:
      break;
  }
  return curves;
}

nlohmann::ordered_json curve_entry(const std::string& file, const MetricSeries& s) {
  nlohmann::ordered_json j;
  j["file"] = file;
  j["metric"] = s.metric;
  j["graph"] = to_string(s.topology.kind);
  j["n"] = s.topology.sites;
  j["coin"] = coin_json(s.coin);
  j["conditioning"] = s.conditioning;
  j["rows"] = s.values.size();
  return j;
}

void write_csv_file(const std::filesystem::path& path, const MetricSeries& s) {
  std::ofstream f = open_output(path);
  write_series_csv(f, s);
  finish_output(f, path);
}

}  // namespace

FigureOutput reproduce_figure(FigureId id, const std::filesystem::path& out_dir, std::size_t jobs,
                              std::size_t steps) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw Error("cannot create output directory '" + out_dir.string() + "'");

  FigureOutput out;
  nlohmann::ordered_json manifest;
  manifest["figure"] = to_string(id);
  manifest["generator"] = "iqwalk v1";
  manifest["steps"] = steps;

  if (id == FigureId::Fig6) {
    // Best closeness over the default coin grid for every target and
    // topology; the argmax coin's full series goes to disk.
    auto& sweeps = manifest["sweeps"] = nlohmann::ordered_json::array();
    for (ReferenceKind target : {ReferenceKind::Ghz, ReferenceKind::W, ReferenceKind::Graph}) {
      for (GraphKind kind : {GraphKind::Cycle, GraphKind::Path}) {
        SweepSpec spec = SweepSpec::default_grid({kind, 4}, target);
        spec.steps = steps;
        const SweepResult r = run_sweep(spec, jobs);
        const MetricSeries best = run_metric_series(figure_config(kind, r.argmax.coin, steps),
                                                    parse_metric("closeness", std::nullopt, target));
        const std::string file =
            "fig6_" + std::string(to_string(kind)) + "_" + std::string(to_string(target)) + "_best.csv";
        write_csv_file(out_dir / file, best);
        out.files.push_back(out_dir / file);
        nlohmann::ordered_json entry = sweep_json(spec, r);
        entry.erase("grid");
        entry["file"] = file;
        sweeps.push_back(std::move(entry));
      }
    }
  } else {
    const std::vector<Curve> curves = figure_curves(id, steps);
    std::vector<MetricSeries> series(curves.size());
    parallel_for(curves.size(), jobs, [&](std::size_t i) { series[i] = run_metric_series(curves[i].cfg, curves[i].metric); });
    auto& entries = manifest["curves"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < curves.size(); ++i) {
      write_csv_file(out_dir / curves[i].file, series[i]);
      out.files.push_back(out_dir / curves[i].file);
      entries.push_back(curve_entry(curves[i].file, series[i]));
    }
  }

  const std::filesystem::path manifest_path = out_dir / (std::string(to_string(id)) + "_manifest.json");
  std::ofstream f = open_output(manifest_path);
  f << manifest.dump(2) << '\n';
  finish_output(f, manifest_path);
  out.files.push_back(manifest_path);
  return out;
}

}  // namespace iqwalk
