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

#include "iqwalk/entanglement_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "iqwalk/errors.hpp"

namespace iqwalk {

void Bipartition::validate(std::size_t subsystems) const {
  if (keep.empty()) throw ShapeError("bipartition side is empty");
  std::vector<std::size_t> k = keep;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (k.back() >= subsystems) throw ShapeError("bipartition index out of range");
  if (k.size() == subsystems) throw ShapeError("bipartition side covers every subsystem");
}

Bipartition Bipartition::complement(std::size_t subsystems) const {
  validate(subsystems);
  Bipartition out;
  for (std::size_t i = 0; i < subsystems; ++i)
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) out.keep.push_back(i);
  return out;
}

void require_density_matrix(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw ShapeError("density matrix must be square and non-empty");
  const double defect = hermiticity_defect(rho);
  if (defect > kDensityTolerance)
    throw ContractError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kDensityTolerance)
    throw ContractError("density matrix trace is " + std::to_string(tr));
  const double lowest = hermitian_eig(rho).eigenvalues.minCoeff();
  if (lowest < -kDensityTolerance)
    throw ContractError("density matrix has negative eigenvalue " + std::to_string(lowest));
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  require_density_matrix(rho);
  const RealVector lambda = hermitian_eig(rho).eigenvalues;
  double s = 0.0;
  for (double l : lambda) {
    l = std::clamp(l, 0.0, 1.0);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return std::max(s, 0.0);
}

double log_negativity(const ComplexMatrix& rho, const SubsystemShape& shape,
                      std::vector<std::size_t> transpose_part) {
  require_density_matrix(rho);
  const double norm = schatten1_norm(partial_transpose(rho, shape, std::move(transpose_part)));
  return std::max(0.0, std::log2(norm));
}

ComplexMatrix pauli_y_string(std::size_t num_qubits) {
  ComplexMatrix y(2, 2);
  y << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t k = 0; k < num_qubits; ++k) out = kron(out, y);
  return out;
}

double n_concurrence(const ComplexMatrix& rho, std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits >= 8 * sizeof(std::size_t) ||
      static_cast<std::size_t>(rho.rows()) != (std::size_t{1} << num_qubits))
    throw ShapeError("concurrence needs a 2^n x 2^n matrix for n = " + std::to_string(num_qubits));
  require_density_matrix(rho);

  // M = √ρ S ρ* S √ρ = R R† with R = √ρ S √ρ*, so the √λ of M are the
  // singular values of R; this avoids square roots of noise-level eigenvalues.
  const ComplexMatrix sy = pauli_y_string(num_qubits);
  const ComplexMatrix root = matrix_sqrt_psd(0.5 * (rho + rho.adjoint()));
  const Eigen::JacobiSVD<ComplexMatrix> svd(root * sy * root.conjugate());
  const RealVector r = svd.singularValues();  // descending

  double result = r[0];
  for (Eigen::Index i = 1; i < r.size(); ++i) result -= r[i];
  return std::clamp(result, 0.0, 1.0);
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw ShapeError("trace distance needs matrices of equal shape");
  require_density_matrix(rho);
  require_density_matrix(sigma);
  const RealVector eps = hermitian_eig(rho - sigma).eigenvalues;
  return std::clamp(0.5 * eps.cwiseAbs().sum(), 0.0, 1.0);
}

double closeness(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return 1.0 - trace_distance(rho, sigma);
}

}  // namespace iqwalk
