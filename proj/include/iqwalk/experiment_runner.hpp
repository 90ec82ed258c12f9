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

// Time series, grid sweeps and figure reproduction on top of the walk and
// metric modules.

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "iqwalk/conditioning.hpp"
#include "iqwalk/entanglement_metrics.hpp"
#include "iqwalk/reference_states.hpp"
#include "iqwalk/walk_engine.hpp"

namespace iqwalk {

/// Coin sets of the entropy/negativity/concurrence figures.
extern const std::array<CoinParams, 4> kEntropyFigureCoins;
/// Best-performing coins for closeness to the cycle cluster state.
extern const std::array<CoinParams, 4> kClusterFigureCoins;

/// Values within this of the sweep maximum are ties.
inline constexpr double kSweepTieTolerance = 1e-12;

enum class MetricKind { Entropy, LogNegativity, Concurrence, ConcurrencePostselected, Closeness };

/// What to evaluate at every time step.
///
/// Names accepted by parse_metric:
///   entropy:<side>             side is a proper subset of {P, C, G}, e.g. "entropy:G", "entropy:PC"
///   logneg                     log-negativity of rho_PC, transposed on the coin
///   concurrence                n-concurrence of the unconditioned vertex register
///   concurrence_postselected   n-concurrence after projecting the coin (needs a projection)
///   closeness                  1 − trace distance to a reference state (needs a target)
struct MetricRequest {
  MetricKind kind = MetricKind::Entropy;
  std::string side = "G";
  std::optional<CoinProjection> projection;
  std::optional<ReferenceKind> target;

  /// Canonical name used in file headers, e.g. "closeness:graph".
  std::string name() const;
};

MetricRequest parse_metric(std::string_view name, std::optional<CoinProjection> projection = std::nullopt,
                           std::optional<ReferenceKind> target = std::nullopt);

/// Subsystem indices of the full walk space for a side like "PC".
std::vector<std::size_t> side_subsystems(std::string_view side, std::size_t sites);

/// Evaluates `metric` on the states t = 0..cfg.steps.
///
/// For post-selected concurrence, a time step whose coin outcome has
/// probability below kZeroProbability has no conditional state; its value
/// is recorded as 0 and its probability as reported.
MetricSeries run_metric_series(const WalkConfig& cfg, const MetricRequest& metric);

/// Probabilities of the coin outcome for a post-selected series; empty for
/// other metrics.
std::vector<double> outcome_probabilities(const WalkConfig& cfg, const MetricRequest& metric);

struct SweepSpec {
  std::vector<double> thetas;
  std::vector<double> phi1s;
  std::vector<double> phi2s;
  GraphTopology topology;
  std::size_t steps = 100;
  ReferenceKind target = ReferenceKind::Graph;
  bool keep_table = false;

  /// θ, φ2 over kπ/20 for k = 0..20, φ1 = 0, T = 100.
  static SweepSpec default_grid(GraphTopology topology, ReferenceKind target);
  void validate() const;
};

struct SweepPoint {
  CoinParams coin;
  std::size_t t = 0;
  double value = 0.0;
};

struct SweepResult {
  double best = 0.0;
  /// Lexicographically smallest (θ, φ1, φ2, t) among the tied maximizers.
  SweepPoint argmax;
  /// Every grid point and time within kSweepTieTolerance of `best`, sorted.
  std::vector<SweepPoint> ties;
  /// Closeness series (t = 0..T) per coin when keep_table is set, in grid order.
  std::vector<MetricSeries> table;
};

/// Exhaustive maximization of closeness over the coin grid and t = 1..T.
/// Deterministic for any `jobs` (results are reduced after all points finish).
SweepResult run_sweep(const SweepSpec& spec, std::size_t jobs = 1);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Exceptions are
/// rethrown on the calling thread (the one with the lowest index wins).
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn);

// Output --------------------------------------------------------------------

/// Header line then one "t,value" row per time step, 12 significant digits.
void write_series_csv(std::ostream& out, const MetricSeries& series);
void write_series_json(std::ostream& out, const MetricSeries& series,
                       const std::vector<double>& probabilities = {});
void write_sweep_json(std::ostream& out, const SweepSpec& spec, const SweepResult& result);

enum class FigureId { Fig2, Fig3, Fig4, Fig5, Fig6, Fig7 };

FigureId parse_figure_id(std::string_view text);
std::string_view to_string(FigureId id);

struct FigureOutput {
  std::vector<std::filesystem::path> files;  // CSVs then the manifest
};

/// Writes one CSV per curve plus <id>_manifest.json into `out_dir`
/// (created if missing). Throws Error on I/O failure.
FigureOutput reproduce_figure(FigureId id, const std::filesystem::path& out_dir, std::size_t jobs = 1,
                              std::size_t steps = 100);

}  // namespace iqwalk
