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

#include "qadc/linalg.hpp"

namespace qadc {

// All logarithms are base 2; every quantity below is reported in bits.

/// A divergence in bits, with a +infinity sentinel for support failures.
struct DivergenceValue {
  double bits = 0.0;
  bool infinite = false;

  static DivergenceValue finite(double b) { return {b, false}; }
  static DivergenceValue inf() { return {0.0, true}; }
  bool operator==(const DivergenceValue&) const = default;
};

double von_neumann_entropy(const DensityMatrix& rho);

/// Umegaki relative entropy; +infinity when supp(rho) is not contained in
/// supp(sigma) (projector-containment check at the support cutoff).
DivergenceValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// I(A;B) for the bipartition (group_a | group_b), which must cover the
/// whole register.
double mutual_information(const DensityMatrix& rho, const std::vector<std::string>& group_a,
                          const std::vector<std::string>& group_b);

/// I(A;B|C) = H(AC) + H(BC) - H(C) - H(ABC). Groups must be disjoint;
/// subsystems outside their union are traced out first.
double conditional_mutual_information(const DensityMatrix& rho, const std::vector<std::string>& group_a,
                                      const std::vector<std::string>& group_b,
                                      const std::vector<std::string>& group_c);

/// Sandwiched Renyi divergence of order alpha (alpha > 0, alpha != 1).
/// Fractional powers of sigma are pseudo-powers on its support. For
/// alpha > 1 the value is +infinity when supp(rho) is not contained in
/// supp(sigma); for alpha < 1 only when the supports are orthogonal. With
/// partially overlapping supports and alpha < 1, the value is computed on
/// the intersection and depends on the support cutoff near rank deficiency.
DivergenceValue sandwiched_renyi(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

/// F(rho, sigma) = trace norm of sqrt(rho) sqrt(sigma), in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// P = sqrt(1 - F^2).
double purified_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// True when supp(a) is contained in supp(b) within the overlap tolerance.
bool support_contained(const LabeledOperator& a, const LabeledOperator& b);

}  // namespace qadc
