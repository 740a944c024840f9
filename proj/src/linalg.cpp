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

#include "qadc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qadc {
namespace {

// Flat index <-> digit decomposition for row-major composite indices.
struct MultiIndex {
  std::vector<int> dims;
  std::vector<long> strides;

  explicit MultiIndex(std::vector<int> d) : dims(std::move(d)), strides(dims.size(), 1) {
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
      strides[i] = strides[i + 1] * dims[i + 1];
  }

  long compose(const std::vector<int>& digits) const {
    long idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) idx += digits[i] * strides[i];
    return idx;
  }

  void decompose(long idx, std::vector<int>& digits) const {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      digits[i] = static_cast<int>(idx / strides[i]);
      idx %= strides[i];
    }
  }
};

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

LabeledOperator::LabeledOperator(Register reg, Matrix mat) : reg_(std::move(reg)), mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols())
    throw ValidationError("operator matrix must be square");
  if (mat_.rows() != reg_.dim()) {
    std::ostringstream msg;
    msg << "matrix side " << mat_.rows() << " does not match register dimension " << reg_.dim();
    throw ValidationError(msg.str());
  }
}

LabeledOperator LabeledOperator::identity(const Register& reg) {
  return {reg, Matrix::Identity(reg.dim(), reg.dim())};
}

LabeledOperator LabeledOperator::zero(const Register& reg) {
  return {reg, Matrix::Zero(reg.dim(), reg.dim())};
}

DensityMatrix::DensityMatrix(LabeledOperator op) : op_(std::move(op)) {
  const Matrix& m = op_.mat();
  double asym = hermiticity_defect(m);
  if (asym > tol::density_hermitian) {
    std::ostringstream msg;
    msg << "density matrix asymmetry " << asym << " exceeds " << tol::density_hermitian;
    throw ValidationError(msg.str());
  }
  double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol::density_trace) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " is not 1";
    throw ValidationError(msg.str());
  }
  double lam_min = min_eigenvalue(m);
  if (lam_min < -tol::density_psd) {
    std::ostringstream msg;
    msg << "density matrix minimum eigenvalue " << lam_min << " below -" << tol::density_psd;
    throw ValidationError(msg.str());
  }
}

Matrix SpectralDecomposition::reconstruct() const {
  Matrix m = Matrix::Zero(reg.dim(), reg.dim());
  for (const auto& c : clusters) m += c.eigenvalue * c.projector;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b) {
  return {a.reg().concat(b.reg()), kron(a.mat(), b.mat())};
}

LabeledOperator partial_trace(const LabeledOperator& x, const std::vector<std::string>& keep) {
  const Register& reg = x.reg();
  for (const auto& n : keep)
    if (!reg.has(n)) throw UnknownSubsystem("no subsystem named '" + n + "'");

  std::vector<std::size_t> kept_pos, traced_pos;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (std::find(keep.begin(), keep.end(), reg[i].name) != keep.end())
      kept_pos.push_back(i);
    else
      traced_pos.push_back(i);
  }

  Register out_reg = reg.keep(keep);
  long dim_k = out_reg.dim();
  long dim_t = 1;
  for (auto p : traced_pos) dim_t *= reg[p].dim;

  MultiIndex full(reg.dims());
  std::vector<int> kdims, tdims;
  for (auto p : kept_pos) kdims.push_back(reg[p].dim);
  for (auto p : traced_pos) tdims.push_back(reg[p].dim);
  MultiIndex kept(kdims.empty() ? std::vector<int>{1} : kdims);
  MultiIndex traced(tdims.empty() ? std::vector<int>{1} : tdims);

  Matrix out = Matrix::Zero(dim_k, dim_k);
  std::vector<int> kd(std::max<std::size_t>(kdims.size(), 1)), ld(std::max<std::size_t>(kdims.size(), 1)),
      td(std::max<std::size_t>(tdims.size(), 1)), digits(reg.size());
  for (long i = 0; i < dim_k; ++i) {
    kept.decompose(i, kd);
    for (long j = 0; j < dim_k; ++j) {
      kept.decompose(j, ld);
      Complex sum = 0.0;
      for (long t = 0; t < dim_t; ++t) {
        traced.decompose(t, td);
        for (std::size_t p = 0; p < kept_pos.size(); ++p) digits[kept_pos[p]] = kd[p];
        for (std::size_t p = 0; p < traced_pos.size(); ++p) digits[traced_pos[p]] = td[p];
        long row = full.compose(digits);
        for (std::size_t p = 0; p < kept_pos.size(); ++p) digits[kept_pos[p]] = ld[p];
        long col = full.compose(digits);
        sum += x.mat()(row, col);
      }
      out(i, j) = sum;
    }
  }
  return {out_reg, std::move(out)};
}

DensityMatrix partial_trace(const DensityMatrix& x, const std::vector<std::string>& keep) {
  return DensityMatrix(partial_trace(x.op(), keep));
}

LabeledOperator permute(const LabeledOperator& x, const std::vector<std::string>& order) {
  const Register& reg = x.reg();
  if (order.size() != reg.size())
    throw BadPartition("permutation must list every subsystem exactly once");
  std::vector<std::size_t> src_pos;
  for (const auto& n : order) {
    auto p = reg.find(n);
    if (!p) throw UnknownSubsystem("no subsystem named '" + n + "'");
    src_pos.push_back(*p);
  }
  std::vector<bool> used(reg.size(), false);
  for (auto p : src_pos) {
    if (used[p]) throw BadPartition("permutation repeats subsystem '" + reg[p].name + "'");
    used[p] = true;
  }

  std::vector<Subsystem> subs;
  for (auto p : src_pos) subs.push_back(reg[p]);
  Register out_reg{std::move(subs)};

  MultiIndex src(reg.dims());
  MultiIndex dst(out_reg.dims());
  long d = reg.dim();
  std::vector<long> map(d);
  std::vector<int> src_digits(reg.size()), dst_digits(reg.size());
  for (long i = 0; i < d; ++i) {
    src.decompose(i, src_digits);
    for (std::size_t k = 0; k < src_pos.size(); ++k) dst_digits[k] = src_digits[src_pos[k]];
    map[dst.compose(dst_digits)] = i;
  }

  Matrix out(d, d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) out(i, j) = x.mat()(map[i], map[j]);
  return {std::move(out_reg), std::move(out)};
}

LabeledOperator rename_subsystems(const LabeledOperator& x, const std::vector<std::string>& new_names) {
  if (new_names.size() != x.reg().size())
    throw BadPartition("rename must supply one name per subsystem");
  std::vector<Subsystem> subs = x.reg().subsystems();
  for (std::size_t i = 0; i < subs.size(); ++i) subs[i].name = new_names[i];
  return {Register(std::move(subs)), x.mat()};
}

double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

SpectralDecomposition spectral_decompose(const LabeledOperator& h, double rel_tol) {
  double asym = hermiticity_defect(h.mat());
  if (asym > tol::hermitian_input) {
    std::ostringstream msg;
    msg << "operator asymmetry " << asym << " exceeds " << tol::hermitian_input;
    throw NotHermitian(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(h.mat()));
  if (es.info() != Eigen::Success) throw ValidationError("eigendecomposition failed");

  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  long n = vals.size();
  double radius = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
  double thr = rel_tol * std::max(1.0, radius);

  SpectralDecomposition sd;
  sd.reg = h.reg();
  sd.absolute_tolerance = thr;

  // Eigen reports ascending order; sweep from the top so clusters come out
  // sorted descending. Adjacent eigenvalues within thr chain into one cluster.
  long i = n - 1;
  while (i >= 0) {
    long j = i;
    while (j - 1 >= 0 && vals(j) - vals(j - 1) <= thr) --j;
    EigenCluster c;
    c.multiplicity = static_cast<int>(i - j + 1);
    double sum = 0.0;
    Matrix proj = Matrix::Zero(n, n);
    for (long k = j; k <= i; ++k) {
      sum += vals(k);
      proj += vecs.col(k) * vecs.col(k).adjoint();
    }
    c.eigenvalue = sum / c.multiplicity;
    c.projector = symmetrized(proj);
    sd.clusters.push_back(std::move(c));
    i = j - 1;
  }
  return sd;
}

int distinct_eigenvalue_count(const LabeledOperator& h, double rel_tol) {
  SpectralDecomposition sd = spectral_decompose(h, rel_tol);
  int count = 0;
  for (const auto& c : sd.clusters)
    if (c.eigenvalue >= -sd.absolute_tolerance) ++count;
  return count;
}

LabeledOperator matrix_function(const LabeledOperator& h, const std::function<double(double)>& f,
                                bool support_only) {
  SpectralDecomposition sd = spectral_decompose(h);
  double lam_max = sd.clusters.empty() ? 0.0 : sd.clusters.front().eigenvalue;
  double tau = tol::support_rel * std::max(lam_max, 0.0);

  Matrix out = Matrix::Zero(h.dim(), h.dim());
  for (const auto& c : sd.clusters) {
    if (support_only && c.eigenvalue <= tau) continue;
    double y = f(c.eigenvalue);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "function value not finite at retained eigenvalue " << c.eigenvalue;
      throw SingularFunction(msg.str());
    }
    out += y * c.projector;
  }
  return {h.reg(), std::move(out)};
}

LabeledOperator support_power(const LabeledOperator& h, double p) {
  return matrix_function(h, [p](double x) { return std::pow(x, p); }, /*support_only=*/true);
}

LabeledOperator support_projector(const LabeledOperator& h) {
  return matrix_function(h, [](double) { return 1.0; }, /*support_only=*/true);
}

LabeledOperator matrix_sqrt(const LabeledOperator& h) { return support_power(h, 0.5); }

LabeledOperator pinch(const LabeledOperator& a, const LabeledOperator& b) {
  if (!(a.reg() == b.reg()))
    throw RegisterMismatch("pinch requires identical registers, got " + to_string(a.reg()) + " vs " +
                           to_string(b.reg()));
  SpectralDecomposition sd = spectral_decompose(a);
  Matrix out = Matrix::Zero(a.dim(), a.dim());
  for (const auto& c : sd.clusters) out += c.projector * b.mat() * c.projector;
  return {a.reg(), std::move(out)};
}

LabeledOperator order_projector(const LabeledOperator& a, const LabeledOperator& b) {
  if (!(a.reg() == b.reg()))
    throw RegisterMismatch("order_projector requires identical registers, got " + to_string(a.reg()) +
                           " vs " + to_string(b.reg()));
  LabeledOperator diff{a.reg(), a.mat() - b.mat()};
  SpectralDecomposition sd = spectral_decompose(diff);
  Matrix out = Matrix::Zero(a.dim(), a.dim());
  for (const auto& c : sd.clusters)
    if (c.eigenvalue >= -sd.absolute_tolerance) out += c.projector;
  return {a.reg(), symmetrized(out)};
}

double min_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace qadc
