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
#include <vector>

#include "iqwalk/tensor_algebra.hpp"
#include "iqwalk/walk_engine.hpp"

namespace iqwalk {

/// Tolerances for accepting a matrix as a density matrix.
inline constexpr double kDensityTolerance = 1e-10;

struct DensityMatrix {
  ComplexMatrix matrix;
  SubsystemShape shape;
};

/// Side of a bipartition whose reduced state is formed.
struct Bipartition {
  std::vector<std::size_t> keep;

  /// Throws ShapeError unless `keep` is a non-empty proper subset of
  /// `subsystems` indices.
  void validate(std::size_t subsystems) const;
  Bipartition complement(std::size_t subsystems) const;
};

/// Time series of a scalar diagnostic with where it came from.
struct MetricSeries {
  std::string metric;
  GraphTopology topology;
  CoinParams coin;
  std::string conditioning = "none";
  std::vector<std::size_t> times;
  std::vector<double> values;
};

/// Throws ContractError unless rho is Hermitian, trace one and PSD within
/// kDensityTolerance.
void require_density_matrix(const ComplexMatrix& rho);

/// Entropy in bits.
double von_neumann_entropy(const ComplexMatrix& rho);

/// max(0, log2 ‖rho^{T_part}‖_1).
double log_negativity(const ComplexMatrix& rho, const SubsystemShape& shape,
                      std::vector<std::size_t> transpose_part);

/// sigma_y ⊗ ... ⊗ sigma_y on `num_qubits` qubits.
ComplexMatrix pauli_y_string(std::size_t num_qubits);

/// n-qubit concurrence max(0, √λ1 − Σ_{j≥2} √λj) with λ the spectrum of
/// rho·S_y·rho*·S_y. That spectrum equals the one of the Hermitian
/// M = √rho·S_y·rho*·S_y·√rho = R·R†, R = √rho·S_y·√rho*, and the √λ are
/// taken as the singular values of R.
double n_concurrence(const ComplexMatrix& rho, std::size_t num_qubits);

/// ½ Σ|ε_i| over the eigenvalues of rho − sigma.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// 1 − trace_distance.
double closeness(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace iqwalk
