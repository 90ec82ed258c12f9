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

// Interacting discrete-time quantum walk on path and cycle graphs.
//
// The walker lives on H_P ⊗ H_C (n positions, a qubit coin) and carries a
// register of n vertex qubits. One step is
//
//   U = Z · (S ⊗ 1_G) · (1_P ⊗ C ⊗ 1_G)
//
// where C is the SU(2) coin, S the conditional shift and Z applies CZ between
// the coin (control) and the vertex qubit at the walker's position.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iqwalk/tensor_algebra.hpp"

namespace iqwalk {

/// Largest site count accepted unless a config raises it. The vertex-register
/// density matrix at n = 12 is 4096 x 4096.
inline constexpr std::size_t kDefaultMaxSites = 12;

/// Subsystem indices within H_P ⊗ H_C ⊗ H_G.
inline constexpr std::size_t kPositionSubsystem = 0;
inline constexpr std::size_t kCoinSubsystem = 1;
inline constexpr std::size_t kFirstVertexSubsystem = 2;

enum class GraphKind { Path, Cycle };

std::string_view to_string(GraphKind kind);
/// Accepts "path"/"linear" and "cycle"/"cyclic"; throws UsageError otherwise.
GraphKind parse_graph_kind(std::string_view text);

struct GraphTopology {
  GraphKind kind = GraphKind::Cycle;
  std::size_t sites = 4;

  /// Edges {i, j} with i < j, in a fixed order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> neighbours(std::size_t vertex) const;
  /// Throws DomainError unless 2 <= sites <= max_sites.
  void validate(std::size_t max_sites = kDefaultMaxSites) const;

  bool operator==(const GraphTopology&) const = default;
};

struct CoinParams {
  double theta = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  bool operator==(const CoinParams&) const = default;
};

struct PureState {
  ComplexVector amplitudes;
  SubsystemShape shape;

  double norm() const { return amplitudes.norm(); }
};

struct WalkConfig {
  GraphTopology topology;
  CoinParams coin;
  std::size_t steps = 0;
  /// Explicit initial state; when empty the standard |0>_P |0>_C |+>^n is used.
  std::optional<PureState> initial;
  std::size_t max_sites = kDefaultMaxSites;
};

/// Shape (n, 2, 2, ..., 2) of the full walk space.
SubsystemShape walk_shape(const GraphTopology& g);

ComplexMatrix build_coin(const CoinParams& c);

/// Shift on H_P ⊗ H_C (dimension 2n). Coin 0 moves i -> i-1 and coin 1 moves
/// i -> i+1; on the path the boundary terms stay in place and flip the coin.
ComplexMatrix build_shift(const GraphTopology& g);

/// ±1 diagonal of the coin-controlled CZ onto the vertex qubit at the
/// walker's position, over the full walk space.
RealVector interaction_phases(const GraphTopology& g);
ComplexMatrix build_interaction(const GraphTopology& g);

/// Dense single-step propagator. Only practical for small n; evolve() never
/// forms it.
ComplexMatrix build_step(const WalkConfig& cfg);

PureState standard_initial_state(const GraphTopology& g);

/// Matrix-free application of one walk step.
class StepOperator {
 public:
  explicit StepOperator(const WalkConfig& cfg);

  /// psi <- U psi. `scratch` is resized as needed.
  void apply(ComplexVector& psi, ComplexVector& scratch) const;
  void apply(ComplexVector& psi) const;

  const SubsystemShape& shape() const { return shape_; }

 private:
  SubsystemShape shape_;
  std::size_t sites_;
  std::size_t register_dim_;
  ComplexMatrix coin_;
  // destination (position, coin) block for each source block
  std::vector<std::size_t> shift_target_;
  RealVector phases_;
};

/// Evolves `cfg.steps` steps by repeated matrix-vector products.
PureState evolve(const WalkConfig& cfg);

/// States at t = 0..cfg.steps.
std::vector<PureState> evolve_trajectory(const WalkConfig& cfg);

/// Calls `visit(t, state)` for t = 0..cfg.steps without storing the trajectory.
void for_each_step(const WalkConfig& cfg,
                   const std::function<void(std::size_t, const PureState&)>& visit);

}  // namespace iqwalk
