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

#include "iqwalk/reference_states.hpp"

#include <cmath>
#include <string>

#include "iqwalk/errors.hpp"

namespace iqwalk {

std::string_view to_string(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::Ghz: return "ghz";
    case ReferenceKind::W: return "w";
    case ReferenceKind::Graph: return "graph";
  }
  return "?";
}

ReferenceKind parse_reference_kind(std::string_view text) {
  if (text == "ghz") return ReferenceKind::Ghz;
  if (text == "w") return ReferenceKind::W;
  if (text == "graph") return ReferenceKind::Graph;
  throw UsageError("unknown reference state '" + std::string(text) + "' (expected ghz, w or graph)");
}

namespace {

void require_qubits(std::size_t n) {
  if (n < 2) throw DomainError("reference states need at least 2 qubits, got " + std::to_string(n));
  if (n > 8 * sizeof(std::size_t) - 2) throw DomainError("too many qubits");
}

}  // namespace

PureState ghz(std::size_t n) {
  require_qubits(n);
  const std::size_t dim = std::size_t{1} << n;
  PureState s{ComplexVector::Zero(dim), SubsystemShape::uniform(n, 2)};
  s.amplitudes[0] = s.amplitudes[dim - 1] = 1.0 / std::sqrt(2.0);
  return s;
}

PureState w_state(std::size_t n) {
  require_qubits(n);
  PureState s{ComplexVector::Zero(std::size_t{1} << n), SubsystemShape::uniform(n, 2)};
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) s.amplitudes[std::size_t{1} << i] = amp;
  return s;
}

PureState graph_state(const GraphTopology& g) {
  g.validate(g.sites);
  const std::size_t n = g.sites;
  const std::size_t dim = std::size_t{1} << n;
  PureState s{ComplexVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))),
              SubsystemShape::uniform(n, 2)};
  // CZ on every edge: sign (−1)^(number of edges with both ends set).
  for (std::size_t r = 0; r < dim; ++r) {
    int parity = 0;
    for (auto [a, b] : g.edges()) {
      const bool on_a = (r >> (n - 1 - a)) & 1;
      const bool on_b = (r >> (n - 1 - b)) & 1;
      parity ^= static_cast<int>(on_a && on_b);
    }
    if (parity) s.amplitudes[r] = -s.amplitudes[r];
  }
  return s;
}

PureState reference_state(ReferenceKind kind, const GraphTopology& g) {
  switch (kind) {
    case ReferenceKind::Ghz: return ghz(g.sites);
    case ReferenceKind::W: return w_state(g.sites);
    case ReferenceKind::Graph: return graph_state(g);
  }
  throw UsageError("unknown reference state");
}

ComplexMatrix projector(const PureState& s) {
  return s.amplitudes * s.amplitudes.adjoint();
}

}  // namespace iqwalk
