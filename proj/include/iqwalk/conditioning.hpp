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

#pragma once

#include <cstddef>
#include <vector>

#include "iqwalk/entanglement_metrics.hpp"
#include "iqwalk/walk_engine.hpp"

namespace iqwalk {

/// Outcomes with probability below this have no conditional state.
inline constexpr double kZeroProbability = 1e-12;

/// Coin measurement outcome |Σ> = cos μ |0> + e^{−iν} sin μ |1>.
struct CoinProjection {
  double mu = 0.0;  // [0, π]
  double nu = 0.0;  // [0, π/2]

  ComplexVector ket() const;
  /// The orthogonal outcome, −e^{iν} sin μ |0> + cos μ |1>.
  CoinProjection complement() const;

  bool operator==(const CoinProjection&) const = default;
};

struct ConditionalState {
  DensityMatrix vertex;
  double probability = 0.0;
};

/// Projects the coin onto |Σ> and traces out the walker position. Throws
/// ZeroProbabilityError when the outcome probability is below
/// kZeroProbability.
ConditionalState postselect_coin(const PureState& state, const CoinProjection& proj);

/// Probability of the outcome |Σ> alone.
double projection_probability(const PureState& state, const CoinProjection& proj);

/// Tr_{P,C} |psi><psi|.
DensityMatrix unconditioned_vertex_state(const PureState& state);

/// Uniform grid: `mu_points` over [0, π] and `nu_points` over [0, π/2].
std::vector<CoinProjection> projection_grid(std::size_t mu_points = 21, std::size_t nu_points = 11);

}  // namespace iqwalk
