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

#include "qadc/random_states.hpp"

#include <cmath>

namespace qadc {

Matrix random_complex_matrix(long rows, long cols, Rng& rng) {
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = rng.next_complex_gaussian();
  return m;
}

Matrix random_hermitian(long dim, Rng& rng) {
  Matrix g = random_complex_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

Matrix random_psd(long dim, Rng& rng) {
  Matrix g = random_complex_matrix(dim, dim, rng);
  return g * g.adjoint();
}

DensityMatrix random_density(const Register& reg, Rng& rng) {
  Matrix p = random_psd(reg.dim(), rng);
  return {reg, Matrix(p / p.trace().real())};
}

DensityMatrix random_full_support_density(const Register& reg, Rng& rng, double floor) {
  long d = reg.dim();
  Matrix p = random_psd(d, rng) + floor * static_cast<double>(d) * Matrix::Identity(d, d);
  return {reg, Matrix(p / p.trace().real())};
}

DensityMatrix random_pure_density(const Register& reg, Rng& rng) {
  Vector v = random_unit_vector(reg.dim(), rng);
  return {reg, Matrix(v * v.adjoint())};
}

Vector random_unit_vector(long dim, Rng& rng) {
  Vector v(dim);
  for (long i = 0; i < dim; ++i) v(i) = rng.next_complex_gaussian();
  double n = v.norm();
  while (n < 1e-12) {  // astronomically unlikely; keeps the function total
    for (long i = 0; i < dim; ++i) v(i) = rng.next_complex_gaussian();
    n = v.norm();
  }
  return v / n;
}

Matrix random_isometry(long rows, long cols, Rng& rng) {
  Matrix g = random_complex_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  Matrix r = qr.matrixQR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
  // Fix column phases so the factorization is unique given the input.
  for (long c = 0; c < cols; ++c) {
    Complex d = r(c, c);
    if (std::abs(d) > 1e-12) q.col(c) *= d / std::abs(d);
  }
  return q;
}

KrausChannel random_channel(const Register& in, const Register& out, int kraus_count, Rng& rng) {
  long din = in.dim();
  long dout = out.dim();
  if (dout * kraus_count < din)
    throw ValidationError("no trace-preserving map: need output dim * kraus count >= input dim");
  Matrix v = random_isometry(dout * kraus_count, din, rng);
  std::vector<Matrix> kraus(kraus_count, Matrix::Zero(dout, din));
  // Row convention matches kraus_to_stinespring: row index is o * k + e.
  for (long o = 0; o < dout; ++o)
    for (int e = 0; e < kraus_count; ++e)
      for (long i = 0; i < din; ++i) kraus[e](o, i) = v(o * kraus_count + e, i);
  return {in, out, std::move(kraus)};
}

std::vector<double> random_simplex(int n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double u = rng.next_double();
    while (u <= 0.0) u = rng.next_double();
    w[i] = -std::log(u);
    total += w[i];
  }
  for (int i = 0; i < n; ++i) w[i] /= total;
  return w;
}

}  // namespace qadc
