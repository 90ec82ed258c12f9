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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "iqwalk/conditioning.hpp"
#include "iqwalk/entanglement_metrics.hpp"
#include "iqwalk/errors.hpp"
#include "iqwalk/reference_states.hpp"
#include "iqwalk/walk_engine.hpp"
#include "test_support.hpp"

using namespace iqwalk;
using namespace iqwalk::testing;
using std::numbers::pi;

namespace {

std::size_t basis(std::size_t n, std::size_t p, std::size_t c, std::size_t reg) {
  return (2 * p + c) * (std::size_t{1} << n) + reg;
}

ComplexMatrix ket_bra(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

// Shift operators written term by term as sums of |i><j|_P ⊗ |c><d|_C.
ComplexMatrix oracle_shift(const GraphTopology& g) {
  const std::size_t n = g.sites;
  ComplexMatrix s = ComplexMatrix::Zero(2 * n, 2 * n);
  if (g.kind == GraphKind::Cycle) {
    for (std::size_t i = 0; i < n; ++i) {
      s += kron(ket_bra(n, (i + n - 1) % n, i), ket_bra(2, 0, 0));
      s += kron(ket_bra(n, (i + 1) % n, i), ket_bra(2, 1, 1));
    }
  } else {
    s += kron(ket_bra(n, n - 1, n - 1), ket_bra(2, 0, 1));
    s += kron(ket_bra(n, 0, 0), ket_bra(2, 1, 0));
    for (std::size_t i = 1; i <= n - 1; ++i) s += kron(ket_bra(n, i - 1, i), ket_bra(2, 0, 0));
    for (std::size_t i = 0; i + 2 <= n; ++i) s += kron(ket_bra(n, i + 1, i), ket_bra(2, 1, 1));
  }
  return s;
}

CoinParams random_coin(Rng& rng) {
  std::uniform_real_distribution<double> th(0.0, pi), ph(0.0, 2 * pi);
  return {th(rng), ph(rng), ph(rng)};
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

ComplexVector plus_register(std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  return ComplexVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

}  // namespace

TEST_CASE("build_coin: substitution examples") {
  const ComplexMatrix id = build_coin({0, 0, 0});
  CHECK(max_abs(id - ComplexMatrix::Identity(2, 2)) < 1e-15);

  ComplexMatrix hadamard_like(2, 2);
  hadamard_like << 1.0, -1.0, 1.0, 1.0;
  hadamard_like /= std::sqrt(2.0);
  CHECK(max_abs(build_coin({pi / 2, 0, 0}) - hadamard_like) < 1e-15);

  const Complex em = std::polar(1.0, -pi / 4), ep = std::polar(1.0, pi / 4);
  ComplexMatrix expected(2, 2);
  expected << em, -ep, em, ep;
  expected /= std::sqrt(2.0);
  CHECK(max_abs(build_coin({pi / 2, 0, pi / 2}) - expected) < 1e-15);
}

TEST_CASE("build_coin: unitary with unit determinant for random angles") {
  Rng rng(101);
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix c = build_coin(random_coin(rng));
    CHECK(unitarity_defect(c) < 1e-12);
    CHECK(std::abs(c.determinant() - 1.0) < 1e-12);
  }
}

TEST_CASE("build_shift: basis moves read off the definition") {
  const ComplexMatrix cyc = build_shift({GraphKind::Cycle, 4});
  ComplexVector in = ComplexVector::Zero(8);
  in[2 * 0 + 1] = 1.0;  // |0>_P |1>_C
  CHECK(std::abs((cyc * in)[2 * 1 + 1] - 1.0) == 0.0);
  in.setZero();
  in[2 * 0 + 0] = 1.0;  // |0>_P |0>_C
  CHECK(std::abs((cyc * in)[2 * 3 + 0] - 1.0) == 0.0);

  const ComplexMatrix path = build_shift({GraphKind::Path, 4});
  CHECK(std::abs((path * in)[2 * 0 + 1] - 1.0) == 0.0);  // stays at 0, coin flips
}

TEST_CASE("build_shift: matches the term-by-term operator for both topologies") {
  for (GraphKind kind : {GraphKind::Path, GraphKind::Cycle})
    for (std::size_t n = 2; n <= 8; ++n) {
      const GraphTopology g{kind, n};
      CAPTURE(n);
      CHECK(max_abs(build_shift(g) - oracle_shift(g)) == 0.0);
      CHECK(unitarity_defect(build_shift(g)) < 1e-12);
    }
}

TEST_CASE("build_shift: cycle commutes with cyclic relabeling of positions") {
  for (std::size_t n = 3; n <= 7; ++n) {
    ComplexMatrix translate = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) translate((i + 1) % n, i) = 1.0;
    const ComplexMatrix t = kron(translate, ComplexMatrix::Identity(2, 2));
    const ComplexMatrix s = build_shift({GraphKind::Cycle, n});
    CHECK(max_abs(s * t - t * s) == 0.0);
  }
}

TEST_CASE("build_interaction: controlled phase at the walker's position") {
  const GraphTopology g{GraphKind::Cycle, 4};
  const ComplexMatrix z = build_interaction(g);
  // diagonal ±1
  CHECK(max_abs(z - ComplexMatrix(z.diagonal().asDiagonal())) == 0.0);
  for (Eigen::Index i = 0; i < z.rows(); ++i) CHECK(std::abs(std::abs(z(i, i).real()) - 1.0) == 0.0);

  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t reg = 0; reg < 16; ++reg) CHECK(z(basis(4, p, 0, reg), basis(4, p, 0, reg)) == Complex(1.0));
  // vertex qubit i is bit (n-1-i): |0010> has qubit 2 set, |0100> has qubit 1 set
  CHECK(z(basis(4, 2, 1, 0b0010), basis(4, 2, 1, 0b0010)) == Complex(-1.0));
  CHECK(z(basis(4, 2, 1, 0b0100), basis(4, 2, 1, 0b0100)) == Complex(1.0));
}

TEST_CASE("operators are unitary for n = 2..5, both topologies, random coins") {
  Rng rng(103);
  for (GraphKind kind : {GraphKind::Path, GraphKind::Cycle})
    for (std::size_t n = 2; n <= 5; ++n) {
      const GraphTopology g{kind, n};
      CHECK(unitarity_defect(build_interaction(g)) < 1e-12);
      for (int i = 0; i < 5; ++i) {
        WalkConfig cfg{g, random_coin(rng), 0, std::nullopt};
        CHECK(unitarity_defect(build_step(cfg)) < 1e-12);
      }
    }
}

TEST_CASE("one step from the standard state on C4") {
  const CoinParams coin{pi / 3, 0.4, 1.1};
  const ComplexMatrix c = build_coin(coin);
  WalkConfig cfg{{GraphKind::Cycle, 4}, coin, 1, std::nullopt};
  const PureState s = evolve(cfg);

  // Coin: |0>(c00|0> + c10|1>); shift: c00|3,0> + c10|1,1>; the CZ only fires
  // on the coin-1 branch, flipping the sign of qubit 1.
  ComplexVector expected = ComplexVector::Zero(128);
  const ComplexVector plus = plus_register(4);
  for (std::size_t reg = 0; reg < 16; ++reg) {
    expected[basis(4, 3, 0, reg)] = c(0, 0) * plus[reg];
    const double sign = (reg & 0b0100) ? -1.0 : 1.0;
    expected[basis(4, 1, 1, reg)] = c(1, 0) * sign * plus[reg];
  }
  CHECK((s.amplitudes - expected).cwiseAbs().maxCoeff() < 1e-15);

  // Same state from the three dense 128-dim factors multiplied out.
  const ComplexMatrix id16 = ComplexMatrix::Identity(16, 16);
  const ComplexMatrix u = build_interaction(cfg.topology) * kron(build_shift(cfg.topology), id16) *
                          kron(kron(ComplexMatrix::Identity(4, 4), c), id16);
  CHECK((u * standard_initial_state(cfg.topology).amplitudes - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("identity coin on the cycle: walker circulates, register untouched") {
  WalkConfig cfg{{GraphKind::Cycle, 4}, {0, 0, 0}, 8, std::nullopt};
  const std::vector<PureState> traj = evolve_trajectory(cfg);
  REQUIRE(traj.size() == 9);
  const std::size_t expected_pos[] = {0, 3, 2, 1, 0, 3, 2, 1, 0};
  const ComplexVector plus = plus_register(4);
  for (std::size_t t = 0; t < traj.size(); ++t) {
    CAPTURE(t);
    const auto block = traj[t].amplitudes.segment(static_cast<Eigen::Index>(basis(4, expected_pos[t], 0, 0)), 16);
    CHECK((block - plus).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(traj[t].norm() - 1.0) < 1e-15);
  }
}

TEST_CASE("identity coin on the cycle leaves the register in |+>^n for every t") {
  for (std::size_t n : {2u, 3u, 5u, 8u}) {
      const GraphTopology g{GraphKind::Cycle, n};
      const ComplexMatrix plus = projector(PureState{plus_register(n), SubsystemShape::uniform(n, 2)});
      WalkConfig cfg{g, {0, 0, 0}, 30, std::nullopt};
      for_each_step(cfg, [&](std::size_t, const PureState& s) {
        CHECK(max_abs(unconditioned_vertex_state(s).matrix - plus) < 1e-14);
      });
  }
}

TEST_CASE("identity coin on the path: the boundary flip sets the control") {
  // |0>_P|0>_C reflects to |0>_P|1>_C, so the CZ fires on vertex qubit 0.
  const GraphTopology g{GraphKind::Path, 3};
  const PureState s = evolve(WalkConfig{g, {0, 0, 0}, 1, std::nullopt});
  for (std::size_t reg = 0; reg < 8; ++reg) {
    const double sign = (reg & 0b100) ? -1.0 : 1.0;
    CHECK(std::abs(s.amplitudes[basis(3, 0, 1, reg)] - sign / std::sqrt(8.0)) < 1e-15);
  }
}

TEST_CASE("evolve agrees with explicit powers of the dense propagator (n = 3, t <= 5)") {
  Rng rng(107);
  for (GraphKind kind : {GraphKind::Path, GraphKind::Cycle})
    for (int trial = 0; trial < 4; ++trial) {
      WalkConfig cfg{{kind, 3}, random_coin(rng), 0, std::nullopt};
      const ComplexMatrix u = build_step(cfg);
      ComplexMatrix power = ComplexMatrix::Identity(u.rows(), u.cols());
      const ComplexVector psi0 = standard_initial_state(cfg.topology).amplitudes;
      for (std::size_t t = 0; t <= 5; ++t) {
        cfg.steps = t;
        CHECK((evolve(cfg).amplitudes - power * psi0).cwiseAbs().maxCoeff() < 1e-10);
        power = u * power;
      }
    }
}

TEST_CASE("evolve: zero steps, explicit initial state, norm drift") {
  WalkConfig cfg{{GraphKind::Path, 4}, {pi / 4, 0, 2 * pi / 5}, 0, std::nullopt};
  CHECK((evolve(cfg).amplitudes - standard_initial_state(cfg.topology).amplitudes).norm() == 0.0);

  Rng rng(109);
  PureState custom{random_pure(rng, 128), walk_shape(cfg.topology)};
  cfg.initial = custom;
  CHECK((evolve(cfg).amplitudes - custom.amplitudes).norm() == 0.0);
  cfg.steps = 100;
  CHECK(std::abs(evolve(cfg).norm() - 1.0) < 1e-10);

  cfg.initial = PureState{random_pure(rng, 64), SubsystemShape{2, 2, 2, 2, 2, 2}};
  CHECK_THROWS_AS(evolve(cfg), ShapeError);
  cfg.initial = PureState{random_pure(rng, 64), custom.shape};  // right shape label, wrong length
  CHECK_THROWS_AS(evolve(cfg), ShapeError);
  cfg.initial = PureState{2.0 * custom.amplitudes, custom.shape};
  CHECK_THROWS_AS(evolve(cfg), ContractError);
}

TEST_CASE("topology validation") {
  CHECK_THROWS_AS(evolve(WalkConfig{{GraphKind::Cycle, 1}, {}, 1, std::nullopt}), DomainError);
  WalkConfig big{{GraphKind::Cycle, 13}, {}, 1, std::nullopt};
  CHECK_THROWS_AS(evolve(big), DomainError);
  big.topology.sites = 5;
  big.max_sites = 4;
  CHECK_THROWS_AS(evolve(big), DomainError);
  CHECK(parse_graph_kind("linear") == GraphKind::Path);
  CHECK(parse_graph_kind("cyclic") == GraphKind::Cycle);
  CHECK_THROWS_AS(parse_graph_kind("star"), UsageError);
}

TEST_CASE("evolve: C4 with coin (pi/2, 0, pi/2) reaches the cluster state at t = 24") {
  const GraphTopology g{GraphKind::Cycle, 4};
  const PureState s = evolve(WalkConfig{g, {pi / 2, 0, pi / 2}, 24, std::nullopt});
  CHECK(closeness(unconditioned_vertex_state(s).matrix, projector(graph_state(g))) > 1 - 1e-9);
}
