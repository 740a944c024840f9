// Copyright 2026 The qadc Authors
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
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qadc/errors.hpp"
#include "qadc/register.hpp"

namespace qadc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
// Hermitian inputs with asymmetry below this are symmetrized, above it rejected.
inline constexpr double hermitian_input = 1e-9;
inline constexpr double density_hermitian = 1e-10;
inline constexpr double density_trace = 1e-10;
inline constexpr double density_psd = 1e-10;
// Eigenvalue clustering: adjacent eigenvalues within cluster_rel * max(1, spectral
// radius) merge into one cluster. Distinct-eigenvalue counts and pinching block
// structure are discontinuous in the spectrum; a fixed relative tolerance keeps
// them reproducible.
inline constexpr double cluster_rel = 1e-8;
// Support cutoff for pseudo-powers, relative to the largest eigenvalue.
inline constexpr double support_rel = 1e-12;
inline constexpr double isometry = 1e-9;
// Projector-containment threshold for support comparisons.
inline constexpr double support_overlap = 1e-8;
}  // namespace tol

/// A complex square matrix over a labeled register.
class LabeledOperator {
 public:
  LabeledOperator(Register reg, Matrix mat);
  static LabeledOperator identity(const Register& reg);
  static LabeledOperator zero(const Register& reg);

  const Register& reg() const { return reg_; }
  const Matrix& mat() const { return mat_; }
  long dim() const { return mat_.rows(); }

  LabeledOperator with_matrix(Matrix m) const { return {reg_, std::move(m)}; }

 private:
  Register reg_;
  Matrix mat_;
};

/// Density matrix: Hermitian, unit trace, positive semidefinite (all within
/// the module tolerances, checked at construction).
class DensityMatrix {
 public:
  explicit DensityMatrix(LabeledOperator op);
  DensityMatrix(Register reg, Matrix mat) : DensityMatrix(LabeledOperator(std::move(reg), std::move(mat))) {}

  const LabeledOperator& op() const { return op_; }
  const Register& reg() const { return op_.reg(); }
  const Matrix& mat() const { return op_.mat(); }
  long dim() const { return op_.dim(); }

 private:
  LabeledOperator op_;
};

struct EigenCluster {
  double eigenvalue = 0.0;
  Matrix projector;
  int multiplicity = 0;
};

/// Eigenvalue clusters of a Hermitian operator, sorted by descending
/// eigenvalue. `absolute_tolerance` is the resolved merge threshold
/// (relative tolerance scaled by max(1, spectral radius)).
struct SpectralDecomposition {
  Register reg;
  std::vector<EigenCluster> clusters;
  double absolute_tolerance = 0.0;

  int cluster_count() const { return static_cast<int>(clusters.size()); }
  Matrix reconstruct() const;
};

// ---------------------------------------------------------------------------
// Elementary register algebra
// ---------------------------------------------------------------------------

Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker product with register concatenation. Registers must have
/// disjoint subsystem names.
LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b);

/// Trace out every subsystem not listed in `keep`. Kept subsystems retain
/// their original order.
LabeledOperator partial_trace(const LabeledOperator& x, const std::vector<std::string>& keep);
DensityMatrix partial_trace(const DensityMatrix& x, const std::vector<std::string>& keep);

/// Reorder subsystems. `order` must be a permutation of the register names.
LabeledOperator permute(const LabeledOperator& x, const std::vector<std::string>& order);

/// Rename subsystems positionally (plumbing for building tensor powers).
LabeledOperator rename_subsystems(const LabeledOperator& x, const std::vector<std::string>& new_names);

// ---------------------------------------------------------------------------
// Spectral operations
// ---------------------------------------------------------------------------

double hermiticity_defect(const Matrix& m);

/// Eigendecomposition with greedy clustering of adjacent eigenvalues. Input
/// asymmetry up to tol::hermitian_input is symmetrized away; larger asymmetry
/// throws NotHermitian.
SpectralDecomposition spectral_decompose(const LabeledOperator& h, double rel_tol = tol::cluster_rel);

/// Number of eigenvalue clusters with nonnegative cluster eigenvalue
/// (values below -tolerance are excluded).
int distinct_eigenvalue_count(const LabeledOperator& h, double rel_tol = tol::cluster_rel);

/// Apply f to each eigenvalue cluster. With support_only, clusters at or
/// below the support cutoff map to zero (pseudo-function on the support).
/// A non-finite f-value on a retained cluster throws SingularFunction.
LabeledOperator matrix_function(const LabeledOperator& h, const std::function<double(double)>& f,
                                bool support_only);

/// h^p on the support of h (pseudo-power).
LabeledOperator support_power(const LabeledOperator& h, double p);
LabeledOperator support_projector(const LabeledOperator& h);
LabeledOperator matrix_sqrt(const LabeledOperator& h);

/// Pinching of b with respect to the eigenspaces of a: sum of P b P over the
/// eigenprojectors P of a. Registers must be identical.
LabeledOperator pinch(const LabeledOperator& a, const LabeledOperator& b);

/// The projector onto the union of eigenspaces of a-b with nonnegative
/// eigenvalue. The zero eigenspace is included; tie-breaking at |lambda| up
/// to the cluster tolerance resolves toward inclusion.
LabeledOperator order_projector(const LabeledOperator& a, const LabeledOperator& b);

double min_eigenvalue(const Matrix& h);
double max_eigenvalue(const Matrix& h);

}  // namespace qadc
