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
#include <string>
#include <string_view>

#include "iqwalk/walk_engine.hpp"

namespace iqwalk {

// Qubit i of every reference state is vertex qubit i of the walk, so the
// states compare directly with the reduced vertex register. Global phase is
// fixed so the first nonzero amplitude is real and positive.

enum class ReferenceKind { Ghz, W, Graph };

std::string_view to_string(ReferenceKind kind);
/// "ghz", "w", "graph"; throws UsageError otherwise.
ReferenceKind parse_reference_kind(std::string_view text);

PureState ghz(std::size_t n);
PureState w_state(std::size_t n);
PureState graph_state(const GraphTopology& g);

/// Reference state on `g.sites` qubits; the topology only matters for Graph.
PureState reference_state(ReferenceKind kind, const GraphTopology& g);

/// |psi><psi|.
ComplexMatrix projector(const PureState& s);

}  // namespace iqwalk
