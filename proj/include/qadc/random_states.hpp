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

#include "qadc/channels.hpp"
#include "qadc/linalg.hpp"
#include "qadc/rng.hpp"

namespace qadc {

// Random instance generators used by the verification suites and tests.

Matrix random_complex_matrix(long rows, long cols, Rng& rng);
Matrix random_hermitian(long dim, Rng& rng);
Matrix random_psd(long dim, Rng& rng);

DensityMatrix random_density(const Register& reg, Rng& rng);
/// Full-rank state with eigenvalues bounded away from zero.
DensityMatrix random_full_support_density(const Register& reg, Rng& rng, double floor = 1e-3);
DensityMatrix random_pure_density(const Register& reg, Rng& rng);

Vector random_unit_vector(long dim, Rng& rng);

/// Haar-ish random isometry (QR of a Gaussian matrix, phases fixed so the
/// result is deterministic in the input).
Matrix random_isometry(long rows, long cols, Rng& rng);

/// Random CPTP map with the given number of Kraus operators.
KrausChannel random_channel(const Register& in, const Register& out, int kraus_count, Rng& rng);

/// Dirichlet(1) point on the probability simplex.
std::vector<double> random_simplex(int n, Rng& rng);

}  // namespace qadc
