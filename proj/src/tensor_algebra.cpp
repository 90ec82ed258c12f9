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

#include "iqwalk/tensor_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "iqwalk/errors.hpp"

namespace iqwalk {

SubsystemShape::SubsystemShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  for (std::size_t d : dims_) {
    if (d == 0) throw ShapeError("subsystem dimension must be positive");
    total_ *= d;
  }
}

SubsystemShape SubsystemShape::uniform(std::size_t count, std::size_t local_dim) {
  return SubsystemShape(std::vector<std::size_t>(count, local_dim));
}

SubsystemShape SubsystemShape::select(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(dims_.at(i));
  return SubsystemShape(std::move(out));
}

void SubsystemShape::digits(std::size_t index, std::span<std::size_t> out) const {
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = index % dims_[k];
    index /= dims_[k];
  }
}

std::size_t SubsystemShape::compose(std::span<const std::size_t> digits) const {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) index = index * dims_[k] + digits[k];
  return index;
}

namespace {

void require_square(const ComplexMatrix& m, const SubsystemShape& shape) {
  if (m.rows() != m.cols())
    throw ShapeError("matrix is not square (" + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ")");
  if (static_cast<std::size_t>(m.rows()) != shape.total())
    throw ShapeError("matrix dimension " + std::to_string(m.rows()) +
                     " does not match subsystem shape total " + std::to_string(shape.total()));
}

std::vector<std::size_t> normalize_indices(std::vector<std::size_t> idx, const SubsystemShape& shape) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (!idx.empty() && idx.back() >= shape.size())
    throw ShapeError("subsystem index " + std::to_string(idx.back()) + " out of range");
  return idx;
}

// Maps each composite index to (kept index, traced index) for a split of the
// subsystems into `keep` and its complement.
struct Split {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

Split split_indices(const SubsystemShape& shape, const std::vector<std::size_t>& keep) {
  std::vector<bool> is_kept(shape.size(), false);
  for (std::size_t k : keep) is_kept[k] = true;
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < shape.size(); ++k)
    if (!is_kept[k]) rest.push_back(k);

  Split s;
  s.kept_dim = shape.select(keep).total();
  s.traced_dim = shape.select(rest).total();
  s.kept.resize(shape.total());
  s.traced.resize(shape.total());
  std::vector<std::size_t> dig(shape.size());
  for (std::size_t i = 0; i < shape.total(); ++i) {
    shape.digits(i, dig);
    std::size_t a = 0, b = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (is_kept[k]) a = a * shape[k] + dig[k];
      else b = b * shape[k] + dig[k];
    }
    s.kept[i] = a;
    s.traced[i] = b;
  }
  return s;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemShape& shape,
                            std::vector<std::size_t> keep) {
  require_square(rho, shape);
  keep = normalize_indices(std::move(keep), shape);
  const Split s = split_indices(shape, keep);

  // Reorder to (kept, traced) so that the trace is a sum of diagonal blocks.
  std::vector<std::size_t> inverse(shape.total());
  for (std::size_t i = 0; i < shape.total(); ++i) inverse[s.kept[i] * s.traced_dim + s.traced[i]] = i;

  ComplexMatrix out = ComplexMatrix::Zero(s.kept_dim, s.kept_dim);
  for (std::size_t a = 0; a < s.kept_dim; ++a)
    for (std::size_t b = 0; b < s.kept_dim; ++b) {
      Complex acc = 0;
      for (std::size_t k = 0; k < s.traced_dim; ++k)
        acc += rho(inverse[a * s.traced_dim + k], inverse[b * s.traced_dim + k]);
      out(a, b) = acc;
    }
  return out;
}

ComplexMatrix reduced_density(const ComplexVector& psi, const SubsystemShape& shape,
                              std::vector<std::size_t> keep) {
  if (static_cast<std::size_t>(psi.size()) != shape.total())
    throw ShapeError("state length " + std::to_string(psi.size()) +
                     " does not match subsystem shape total " + std::to_string(shape.total()));
  keep = normalize_indices(std::move(keep), shape);
  const Split s = split_indices(shape, keep);

  ComplexMatrix amp(s.kept_dim, s.traced_dim);
  for (std::size_t i = 0; i < shape.total(); ++i) amp(s.kept[i], s.traced[i]) = psi[i];
  return amp * amp.adjoint();
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemShape& shape,
                                std::vector<std::size_t> part) {
  require_square(rho, shape);
  part = normalize_indices(std::move(part), shape);

  const std::size_t n = shape.total();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> row(shape.size()), col(shape.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      shape.digits(r, row);
      shape.digits(c, col);
      for (std::size_t k : part) std::swap(row[k], col[k]);
      out(shape.compose(row), shape.compose(col)) = rho(r, c);
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("matrix is not square");
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& a, bool with_vectors) {
  const double defect = hermiticity_defect(a);
  if (defect > kHermitianTolerance)
    throw ContractError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");

  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      sym, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ContractError("Hermitian eigensolver did not converge");

  // Eigen returns ascending order.
  HermitianSpectrum out;
  out.eigenvalues = solver.eigenvalues().reverse();
  if (with_vectors) out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
  HermitianSpectrum spec = hermitian_eig(a, true);
  RealVector roots(spec.eigenvalues.size());
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    double lambda = spec.eigenvalues[i];
    if (lambda < -kPsdClampTolerance)
      throw NotPsdError("matrix is not positive semidefinite (eigenvalue " + std::to_string(lambda) + ")");
    roots[i] = std::sqrt(std::max(lambda, 0.0));
  }
  const ComplexMatrix& v = *spec.eigenvectors;
  return v * roots.asDiagonal() * v.adjoint();
}

double schatten1_norm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("Schatten norm requires a square matrix");
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

}  // namespace iqwalk
