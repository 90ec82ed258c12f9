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

#include "iqwalk/walk_engine.hpp"

#include <cmath>
#include <string>

#include "iqwalk/errors.hpp"

namespace iqwalk {

std::string_view to_string(GraphKind kind) {
  return kind == GraphKind::Path ? "path" : "cycle";
}

GraphKind parse_graph_kind(std::string_view text) {
  if (text == "path" || text == "linear") return GraphKind::Path;
  if (text == "cycle" || text == "cyclic") return GraphKind::Cycle;
  throw UsageError("unknown graph kind '" + std::string(text) + "' (expected path or cycle)");
}

std::vector<std::pair<std::size_t, std::size_t>> GraphTopology::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < sites; ++i) out.emplace_back(i, i + 1);
  // C_2 would duplicate the single edge.
  if (kind == GraphKind::Cycle && sites > 2) out.emplace_back(0, sites - 1);
  return out;
}

std::vector<std::size_t> GraphTopology::neighbours(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (auto [a, b] : edges()) {
    if (a == vertex) out.push_back(b);
    if (b == vertex) out.push_back(a);
  }
  return out;
}

void GraphTopology::validate(std::size_t max_sites) const {
  if (sites < 2) throw DomainError("graph needs at least 2 sites, got " + std::to_string(sites));
  if (sites > max_sites)
    throw DomainError("site count " + std::to_string(sites) + " exceeds the ceiling of " +
                      std::to_string(max_sites));
}

SubsystemShape walk_shape(const GraphTopology& g) {
  std::vector<std::size_t> dims{g.sites, 2};
  dims.insert(dims.end(), g.sites, 2);
  return SubsystemShape(std::move(dims));
}

ComplexMatrix build_coin(const CoinParams& c) {
  const double cs = std::cos(c.theta / 2);
  const double sn = std::sin(c.theta / 2);
  auto phase = [](double a) { return std::polar(1.0, a); };
  ComplexMatrix m(2, 2);
  m(0, 0) = phase(-(c.phi1 + c.phi2) / 2) * cs;
  m(0, 1) = -phase((c.phi2 - c.phi1) / 2) * sn;
  m(1, 0) = phase((c.phi1 - c.phi2) / 2) * sn;
  m(1, 1) = phase((c.phi1 + c.phi2) / 2) * cs;
  return m;
}

namespace {

// Index of the (position, coin) basis state that |p>|c> is sent to.
std::size_t shift_destination(const GraphTopology& g, std::size_t p, std::size_t c) {
  const std::size_t n = g.sites;
  if (g.kind == GraphKind::Cycle) {
    const std::size_t q = c == 0 ? (p + n - 1) % n : (p + 1) % n;
    return 2 * q + c;
  }
  if (c == 0) return p == 0 ? 2 * 0 + 1 : 2 * (p - 1) + 0;
  return p == n - 1 ? 2 * (n - 1) + 0 : 2 * (p + 1) + 1;
}

}  // namespace

ComplexMatrix build_shift(const GraphTopology& g) {
  g.validate(g.sites);
  const std::size_t dim = 2 * g.sites;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (std::size_t p = 0; p < g.sites; ++p)
    for (std::size_t c = 0; c < 2; ++c) s(shift_destination(g, p, c), 2 * p + c) = 1.0;
  return s;
}

RealVector interaction_phases(const GraphTopology& g) {
  g.validate(g.sites);
  const std::size_t n = g.sites;
  const std::size_t reg = std::size_t{1} << n;
  RealVector d = RealVector::Ones(2 * n * reg);
  for (std::size_t p = 0; p < n; ++p) {
    // vertex qubit p is bit (n-1-p) of the register index
    const std::size_t mask = std::size_t{1} << (n - 1 - p);
    const std::size_t base = (2 * p + 1) * reg;
    for (std::size_t r = 0; r < reg; ++r)
      if (r & mask) d[base + r] = -1.0;
  }
  return d;
}

ComplexMatrix build_interaction(const GraphTopology& g) {
  return interaction_phases(g).cast<Complex>().asDiagonal();
}

ComplexMatrix build_step(const WalkConfig& cfg) {
  cfg.topology.validate(cfg.max_sites);
  const std::size_t reg = std::size_t{1} << cfg.topology.sites;
  const ComplexMatrix id_reg = ComplexMatrix::Identity(reg, reg);
  const ComplexMatrix id_pos = ComplexMatrix::Identity(cfg.topology.sites, cfg.topology.sites);
  const ComplexMatrix coin = kron(kron(id_pos, build_coin(cfg.coin)), id_reg);
  const ComplexMatrix shift = kron(build_shift(cfg.topology), id_reg);
  return interaction_phases(cfg.topology).cast<Complex>().asDiagonal() * (shift * coin);
}

PureState standard_initial_state(const GraphTopology& g) {
  g.validate(g.sites);
  PureState s{ComplexVector::Zero(walk_shape(g).total()), walk_shape(g)};
  const std::size_t reg = std::size_t{1} << g.sites;
  const double amp = 1.0 / std::sqrt(static_cast<double>(reg));
  // |0>_P |0>_C occupies the first register block.
  s.amplitudes.head(reg).setConstant(amp);
  return s;
}

StepOperator::StepOperator(const WalkConfig& cfg)
    : shape_(walk_shape(cfg.topology)),
      sites_(cfg.topology.sites),
      register_dim_(std::size_t{1} << cfg.topology.sites),
      coin_(build_coin(cfg.coin)),
      phases_(interaction_phases(cfg.topology)) {
  cfg.topology.validate(cfg.max_sites);
  shift_target_.resize(2 * sites_);
  for (std::size_t p = 0; p < sites_; ++p)
    for (std::size_t c = 0; c < 2; ++c) shift_target_[2 * p + c] = shift_destination(cfg.topology, p, c);
}

void StepOperator::apply(ComplexVector& psi, ComplexVector& scratch) const {
  if (static_cast<std::size_t>(psi.size()) != shape_.total())
    throw ShapeError("state length does not match the walk space");
  const Eigen::Index reg = static_cast<Eigen::Index>(register_dim_);

  scratch.resize(psi.size());
  for (std::size_t p = 0; p < sites_; ++p) {
    const Eigen::Index b0 = static_cast<Eigen::Index>(2 * p) * reg;
    const Eigen::Index b1 = b0 + reg;
    // Coin mixes the two coin blocks at position p, then the shift moves each
    // block to its destination.
    const auto in0 = psi.segment(b0, reg);
    const auto in1 = psi.segment(b1, reg);
    scratch.segment(static_cast<Eigen::Index>(shift_target_[2 * p]) * reg, reg) =
        coin_(0, 0) * in0 + coin_(0, 1) * in1;
    scratch.segment(static_cast<Eigen::Index>(shift_target_[2 * p + 1]) * reg, reg) =
        coin_(1, 0) * in0 + coin_(1, 1) * in1;
  }
  psi = scratch.cwiseProduct(phases_.cast<Complex>());
}

void StepOperator::apply(ComplexVector& psi) const {
  ComplexVector scratch;
  apply(psi, scratch);
}

namespace {

PureState initial_state(const WalkConfig& cfg) {
  cfg.topology.validate(cfg.max_sites);
  if (!cfg.initial) return standard_initial_state(cfg.topology);
  const SubsystemShape shape = walk_shape(cfg.topology);
  if (!(cfg.initial->shape == shape) || static_cast<std::size_t>(cfg.initial->amplitudes.size()) != shape.total())
    throw ShapeError("explicit initial state does not live on the walk space");
  if (std::abs(cfg.initial->norm() - 1.0) > 1e-10)
    throw ContractError("explicit initial state is not normalized");
  return *cfg.initial;
}

}  // namespace

void for_each_step(const WalkConfig& cfg,
                   const std::function<void(std::size_t, const PureState&)>& visit) {
  PureState state = initial_state(cfg);
  const StepOperator step(cfg);
  ComplexVector scratch;
  visit(0, state);
  for (std::size_t t = 1; t <= cfg.steps; ++t) {
    step.apply(state.amplitudes, scratch);
    visit(t, state);
  }
}

PureState evolve(const WalkConfig& cfg) {
  PureState state = initial_state(cfg);
  const StepOperator step(cfg);
  ComplexVector scratch;
  for (std::size_t t = 0; t < cfg.steps; ++t) step.apply(state.amplitudes, scratch);
  return state;
}

std::vector<PureState> evolve_trajectory(const WalkConfig& cfg) {
  std::vector<PureState> out;
  out.reserve(cfg.steps + 1);
  for_each_step(cfg, [&](std::size_t, const PureState& s) { out.push_back(s); });
  return out;
}

}  // namespace iqwalk
