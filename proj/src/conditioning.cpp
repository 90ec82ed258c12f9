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

#include "iqwalk/conditioning.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "iqwalk/errors.hpp"

namespace iqwalk {

ComplexVector CoinProjection::ket() const {
  ComplexVector k(2);
  k << std::cos(mu), std::polar(1.0, -nu) * std::sin(mu);
  return k;
}

CoinProjection CoinProjection::complement() const {
  // −e^{iν} sin μ |0> + cos μ |1> equals e^{iν}(cos μ' |0> + e^{−iν} sin μ' |1>)
  // with μ' = μ + π/2, the same ray.
  return CoinProjection{mu + std::numbers::pi / 2, nu};
}

namespace {

struct WalkLayout {
  std::size_t positions;
  std::size_t register_dim;
  SubsystemShape vertex_shape;
};

WalkLayout layout_of(const PureState& state) {
  const auto& dims = state.shape.dims();
  if (dims.size() < 3 || dims[kCoinSubsystem] != 2)
    throw ShapeError("state does not live on a position ⊗ coin ⊗ register space");
  if (static_cast<std::size_t>(state.amplitudes.size()) != state.shape.total())
    throw ShapeError("amplitude vector length does not match its shape");
  std::vector<std::size_t> rest(dims.begin() + kFirstVertexSubsystem, dims.end());
  SubsystemShape vertex(std::move(rest));
  return WalkLayout{dims[kPositionSubsystem], vertex.total(), vertex};
}

// Rows: walker position; columns: register index. Entry is <Σ|_C psi.
ComplexMatrix contract_coin(const PureState& state, const WalkLayout& lay, const CoinProjection& proj) {
  const ComplexVector bra = proj.ket().conjugate();
  const Eigen::Index reg = static_cast<Eigen::Index>(lay.register_dim);
  ComplexMatrix a(lay.positions, lay.register_dim);
  for (std::size_t p = 0; p < lay.positions; ++p) {
    const Eigen::Index base = static_cast<Eigen::Index>(2 * p) * reg;
    a.row(p) = (bra[0] * state.amplitudes.segment(base, reg) +
                bra[1] * state.amplitudes.segment(base + reg, reg))
                   .transpose();
  }
  return a;
}

}  // namespace

double projection_probability(const PureState& state, const CoinProjection& proj) {
  const WalkLayout lay = layout_of(state);
  return contract_coin(state, lay, proj).squaredNorm();
}

ConditionalState postselect_coin(const PureState& state, const CoinProjection& proj) {
  const WalkLayout lay = layout_of(state);
  const ComplexMatrix a = contract_coin(state, lay, proj);
  const double p = a.squaredNorm();
  if (p < kZeroProbability)
    throw ZeroProbabilityError("coin outcome (mu=" + std::to_string(proj.mu) + ", nu=" +
                               std::to_string(proj.nu) + ") has probability " + std::to_string(p));
  ComplexMatrix rho = a.transpose() * a.conjugate() / p;
  return ConditionalState{DensityMatrix{std::move(rho), lay.vertex_shape}, p};
}

DensityMatrix unconditioned_vertex_state(const PureState& state) {
  const WalkLayout lay = layout_of(state);
  // Reshape into (position·coin) x register; rho = Aᵀ A*.
  const Eigen::Index rows = static_cast<Eigen::Index>(2 * lay.positions);
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(
      state.amplitudes.data(), rows, static_cast<Eigen::Index>(lay.register_dim));
  return DensityMatrix{a.transpose() * a.conjugate(), lay.vertex_shape};
}

std::vector<CoinProjection> projection_grid(std::size_t mu_points, std::size_t nu_points) {
  if (mu_points == 0 || nu_points == 0) throw UsageError("projection grid needs at least one point per axis");
  auto axis = [](std::size_t count, double hi, std::size_t i) {
    return count == 1 ? 0.0 : hi * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  std::vector<CoinProjection> out;
  out.reserve(mu_points * nu_points);
  for (std::size_t i = 0; i < mu_points; ++i)
    for (std::size_t j = 0; j < nu_points; ++j)
      out.push_back({axis(mu_points, std::numbers::pi, i), axis(nu_points, std::numbers::pi / 2, j)});
  return out;
}

}  // namespace iqwalk
