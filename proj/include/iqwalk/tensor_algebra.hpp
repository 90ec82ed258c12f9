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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace iqwalk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance on ‖A − A†‖_max accepted by the Hermitian solvers.
inline constexpr double kHermitianTolerance = 1e-10;
/// Eigenvalues in [−kPsdClampTolerance, 0) are treated as zero.
inline constexpr double kPsdClampTolerance = 1e-12;

/// Local dimensions of a composite Hilbert space.
///
/// Composite indices are row-major: subsystem 0 is the most significant
/// digit. For the interacting walk the order is position, coin, then the
/// vertex qubits 0..n-1.
class SubsystemShape {
 public:
  SubsystemShape() = default;
  explicit SubsystemShape(std::vector<std::size_t> dims);
  SubsystemShape(std::initializer_list<std::size_t> dims)
      : SubsystemShape(std::vector<std::size_t>(dims)) {}

  /// Shape with `count` copies of `local_dim`.
  static SubsystemShape uniform(std::size_t count, std::size_t local_dim);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  std::size_t total() const { return total_; }

  /// Shape restricted to the given (sorted, unique) subsystem indices.
  SubsystemShape select(std::span<const std::size_t> indices) const;

  /// Split a composite index into per-subsystem digits.
  void digits(std::size_t index, std::span<std::size_t> out) const;
  std::size_t compose(std::span<const std::size_t> digits) const;

  bool operator==(const SubsystemShape&) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

struct HermitianSpectrum {
  RealVector eigenvalues;  // descending
  std::optional<ComplexMatrix> eigenvectors;  // columns, same order
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on the subsystems in `keep`, in their original order.
/// Throws ShapeError on dimension mismatch or an invalid index.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemShape& shape,
                            std::vector<std::size_t> keep);

/// Reduced density matrix of the pure state `psi` on `keep`, computed as
/// A·A† from a reshaped amplitude vector without forming |psi><psi|.
ComplexMatrix reduced_density(const ComplexVector& psi, const SubsystemShape& shape,
                              std::vector<std::size_t> keep);

/// Transposes the indices belonging to the subsystems in `part`.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemShape& shape,
                                std::vector<std::size_t> part);

/// Symmetrizes and diagonalizes; throws ContractError if ‖A − A†‖_max exceeds
/// kHermitianTolerance.
HermitianSpectrum hermitian_eig(const ComplexMatrix& a, bool with_vectors = false);

/// Principal square root of a positive semidefinite matrix. Throws
/// NotPsdError when an eigenvalue is below −kPsdClampTolerance.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);

/// Sum of singular values.
double schatten1_norm(const ComplexMatrix& a);

/// ‖A − A†‖_max.
double hermiticity_defect(const ComplexMatrix& a);

}  // namespace iqwalk
