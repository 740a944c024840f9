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

#include <vector>

#include "qadc/divergences.hpp"
#include "qadc/linalg.hpp"
#include "qadc/random_states.hpp"
#include "qadc/rng.hpp"

namespace qadc::testing {

inline Matrix diag(const std::vector<double>& entries) {
  Matrix m = Matrix::Zero(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

inline Vector basis_vector(long dim, long index) {
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

/// |Phi+><Phi+| on two named qubits.
inline DensityMatrix bell_state(const std::string& a = "A", const std::string& b = "B") {
  Register reg = Register::single(a, 2).concat(Register::single(b, 2));
  Vector v = Vector::Zero(4);
  v(0) = v(3) = M_SQRT1_2;
  return {reg, Matrix(v * v.adjoint())};
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qadc::testing
