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

#include "iqwalk/entanglement_metrics.hpp"
#include "iqwalk/errors.hpp"
#include "iqwalk/reference_states.hpp"
#include "test_support.hpp"

using namespace iqwalk;
using namespace iqwalk::testing;

namespace {

ComplexMatrix pure(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector bell() {
  ComplexVector v = ComplexVector::Zero(4);
  v[0] = v[3] = 1.0 / std::sqrt(2.0);
  return v;
}

ComplexMatrix maximally_mixed(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
}

ComplexMatrix random_product(Rng& rng, Eigen::Index da, Eigen::Index db) {
  return kron(random_density(rng, da), random_density(rng, db));
}

}  // namespace

TEST_CASE("von_neumann_entropy: examples") {
  Rng rng(201);
  CHECK(von_neumann_entropy(pure(random_pure(rng, 8))) < 1e-12);
  CHECK(std::abs(von_neumann_entropy(maximally_mixed(2)) - 1.0) < 1e-14);
  CHECK(std::abs(von_neumann_entropy(maximally_mixed(4)) - 2.0) < 1e-14);
  CHECK(std::abs(von_neumann_entropy(maximally_mixed(16)) - 4.0) < 1e-13);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  const double expected = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
  CHECK(std::abs(von_neumann_entropy(d) - expected) < 1e-14);
}

TEST_CASE("von_neumann_entropy: bounded and invariant under unitary conjugation") {
  Rng rng(203);
  for (Eigen::Index dim : {2, 3, 4, 8}) {
    for (int i = 0; i < 10; ++i) {
      const ComplexMatrix rho = random_density(rng, dim, 1 + i % dim);
      const ComplexMatrix u = random_unitary(rng, dim);
      const double s = von_neumann_entropy(rho);
      CHECK(s >= 0.0);
      CHECK(s <= std::log2(static_cast<double>(dim)) + 1e-12);
      CHECK(std::abs(von_neumann_entropy(u * rho * u.adjoint()) - s) < 1e-10);
    }
  }
}

TEST_CASE("von_neumann_entropy: both reductions of a pure bipartite state agree") {
  Rng rng(205);
  const std::vector<std::pair<std::size_t, std::size_t>> splits = {{2, 2}, {2, 8}, {8, 16}, {3, 5}};
  for (auto [da, db] : splits) {
    for (int i = 0; i < 5; ++i) {
      const ComplexMatrix rho = pure(random_pure(rng, static_cast<Eigen::Index>(da * db)));
      const ComplexMatrix a = oracle_partial_trace(rho, {da, db}, {true, false});
      const ComplexMatrix b = oracle_partial_trace(rho, {da, db}, {false, true});
      const double sa = von_neumann_entropy(a), sb = von_neumann_entropy(b);
      CHECK(std::abs(sa - sb) < 1e-9);
      CHECK(sa <= std::log2(static_cast<double>(std::min(da, db))) + 1e-12);
    }
  }
}

TEST_CASE("log_negativity: product states, Bell state, separable mixtures") {
  Rng rng(207);
  const SubsystemShape two_qubits({2, 2});
  CHECK(std::abs(log_negativity(pure(bell()), two_qubits, {1}) - 1.0) < 1e-12);
  CHECK(std::abs(log_negativity(pure(bell()), two_qubits, {0}) - 1.0) < 1e-12);

  const SubsystemShape mixed_shape({2, 3});
  for (int i = 0; i < 10; ++i) {
    CHECK(log_negativity(random_product(rng, 2, 3), mixed_shape, {1}) < 1e-12);

    // Convex mixture of five products.
    ComplexMatrix mix = ComplexMatrix::Zero(6, 6);
    std::uniform_real_distribution<double> w(0.0, 1.0);
    double total = 0.0;
    for (int k = 0; k < 5; ++k) {
      const double wk = w(rng);
      mix += wk * random_product(rng, 2, 3);
      total += wk;
    }
    mix /= total;
    CHECK(log_negativity(mix, mixed_shape, {0}) < 1e-12);
  }
}

TEST_CASE("log_negativity: non-negative and matches log2 of the trace norm on random states") {
  Rng rng(209);
  const SubsystemShape shape({2, 2, 2});
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix rho = random_density(rng, 8, 1 + i % 4);
    const double ln = log_negativity(rho, shape, {0});
    CHECK(ln >= 0.0);
    // Oracle: partial transpose by index arithmetic, trace norm from a Hermitian solver.
    ComplexMatrix pt(8, 8);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) pt((c & 4) | (r & 3), (r & 4) | (c & 3)) = rho(r, c);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(pt);
    CHECK(std::abs(ln - std::max(0.0, std::log2(es.eigenvalues().cwiseAbs().sum()))) < 1e-10);
  }
}

TEST_CASE("n_concurrence: reference-state examples") {
  CHECK(std::abs(n_concurrence(projector(ghz(4)), 4) - 1.0) < 1e-10);
  CHECK(std::abs(oracle_concurrence_direct(projector(ghz(4)), 4) - 1.0) < 1e-8);
  CHECK(n_concurrence(projector(w_state(4)), 4) < 1e-10);
  CHECK(std::abs(n_concurrence(pure(bell()), 2) - 1.0) < 1e-10);
}

TEST_CASE("n_concurrence: zero when any qubit is in a product with the rest") {
  Rng rng(211);
  for (int i = 0; i < 10; ++i) {
    const ComplexVector rest = random_pure(rng, 8);
    const ComplexVector one = random_pure(rng, 2);
    CHECK(n_concurrence(pure(kron(one, rest)), 4) < 1e-8);
    CHECK(n_concurrence(pure(kron(rest, one)), 4) < 1e-8);
    CHECK(n_concurrence(kron(random_density(rng, 2), random_density(rng, 8, 1)), 4) < 1e-8);
  }
}

TEST_CASE("n_concurrence: Hermitian route agrees with direct diagonalization") {
  Rng rng(213);
  for (std::size_t n : {2u, 3u, 4u}) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    for (int i = 0; i < 15; ++i) {
      const ComplexMatrix rho = random_density(rng, dim, 1 + i % 3);
      CAPTURE(n);
      CAPTURE(i);
      const double c = n_concurrence(rho, n);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
      CHECK(std::abs(c - std::min(1.0, oracle_concurrence_direct(rho, n))) < 1e-8);
    }
  }
}

TEST_CASE("n_concurrence: two qubits reduce to the Wootters formula") {
  Rng rng(215);
  int nonzero = 0;
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix rho = random_density(rng, 4, 1 + i % 4);
    const double c = n_concurrence(rho, 2);
    if (c > 1e-3) ++nonzero;
    CHECK(std::abs(c - oracle_wootters(rho)) < 1e-8);
  }
  CHECK(nonzero >= 5);

  // Werner family: C = max(0, (3p - 1)/2).
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const ComplexMatrix werner = p * pure(bell()) + (1.0 - p) * maximally_mixed(4);
    CHECK(std::abs(n_concurrence(werner, 2) - std::max(0.0, (3 * p - 1) / 2)) < 1e-8);
  }
}

TEST_CASE("pauli_y_string matches the index-arithmetic construction") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(max_abs(pauli_y_string(n) - oracle_pauli_y_string(n)) == 0.0);
}

TEST_CASE("trace_distance and closeness: examples") {
  Rng rng(217);
  const ComplexMatrix rho = random_density(rng, 4);
  CHECK(trace_distance(rho, rho) < 1e-14);
  CHECK(std::abs(closeness(rho, rho) - 1.0) < 1e-14);

  ComplexVector a = ComplexVector::Zero(2), b = ComplexVector::Zero(2);
  a[0] = 1.0;
  b[1] = 1.0;
  CHECK(std::abs(trace_distance(pure(a), pure(b)) - 1.0) < 1e-14);
  CHECK(std::abs(closeness(pure(a), pure(b))) < 1e-14);
  CHECK(std::abs(trace_distance(maximally_mixed(2), pure(a)) - 0.5) < 1e-14);

  // Pure states: δ = sqrt(1 - |<a|b>|^2).
  for (int i = 0; i < 10; ++i) {
    const ComplexVector u = random_pure(rng, 8), v = random_pure(rng, 8);
    const double overlap = std::norm(u.dot(v));
    CHECK(std::abs(trace_distance(pure(u), pure(v)) - std::sqrt(1.0 - overlap)) < 1e-10);
  }
}

TEST_CASE("trace_distance is a unitarily invariant metric") {
  Rng rng(219);
  for (int i = 0; i < 30; ++i) {
    const Eigen::Index dim = 2 + i % 7;
    const ComplexMatrix r = random_density(rng, dim, 1 + i % 3);
    const ComplexMatrix s = random_density(rng, dim);
    const ComplexMatrix t = random_density(rng, dim, 1);
    const double rs = trace_distance(r, s), sr = trace_distance(s, r);
    CHECK(rs >= 0.0);
    CHECK(rs <= 1.0);
    CHECK(std::abs(rs - sr) < 1e-10);
    CHECK(rs <= trace_distance(r, t) + trace_distance(t, s) + 1e-10);
    const ComplexMatrix u = random_unitary(rng, dim);
    CHECK(std::abs(trace_distance(u * r * u.adjoint(), u * s * u.adjoint()) - rs) < 1e-10);
  }
}

TEST_CASE("error paths") {
  ComplexMatrix not_hermitian = maximally_mixed(2);
  not_hermitian(0, 1) = 0.1;
  CHECK_THROWS_AS(von_neumann_entropy(not_hermitian), ContractError);
  CHECK_THROWS_AS(von_neumann_entropy(2.0 * maximally_mixed(2)), ContractError);

  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  CHECK_THROWS_AS(von_neumann_entropy(negative), ContractError);
  CHECK_THROWS_AS(log_negativity(negative, SubsystemShape({2}), {0}), ContractError);

  CHECK_THROWS_AS(n_concurrence(maximally_mixed(6), 3), ShapeError);
  CHECK_THROWS_AS(n_concurrence(maximally_mixed(8), 2), ShapeError);
  CHECK_THROWS_AS(trace_distance(maximally_mixed(2), maximally_mixed(4)), ShapeError);
  CHECK_THROWS_AS(closeness(maximally_mixed(4), maximally_mixed(2)), ShapeError);
  CHECK_THROWS_AS(log_negativity(maximally_mixed(4), SubsystemShape({2, 3}), {0}), ShapeError);
}

TEST_CASE("Bipartition: validation and complement") {
  const Bipartition side{{2}};
  CHECK_NOTHROW(side.validate(3));
  CHECK(side.complement(3).keep == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(Bipartition{{}}.validate(3), ShapeError);
  CHECK_THROWS_AS((Bipartition{{0, 1, 2}}.validate(3)), ShapeError);
  CHECK_THROWS_AS(Bipartition{{3}}.validate(3), ShapeError);
}
