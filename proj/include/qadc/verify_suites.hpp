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

#include <cstdint>
#include <string>
#include <vector>

#include "qadc/oneshot.hpp"

namespace qadc {

// Randomized verification suites shared by the CLI `verify` command and the
// acceptance tests. Every suite is deterministic in its seed.

struct PinchingSuiteResult {
  int cases = 0;
  double min_inequality_slack = 0.0;  // min eig of nu * pinch(a, b) - b
  double max_commutator = 0.0;        // max-abs of [a, pinch(a, b)]
  double max_selfadjoint_dev = 0.0;   // |Tr[pinch(a,b) c] - Tr[b pinch(a,c)]|
  bool pass = false;
};

/// Random (Hermitian a, PSD b) pairs at dims 2..8: pinching inequality,
/// commutation with the reference, and self-adjointness of the pinching map.
PinchingSuiteResult pinching_suite(std::uint64_t seed, int cases = 200);

struct HnSuiteResult {
  int cases = 0;
  double min_slack = 0.0;
  bool pass = false;
};

HnSuiteResult hayashi_nagaoka_suite(std::uint64_t seed, int cases = 500);

struct Lemma2SuiteResult {
  int cases = 0;
  double max_miss_excess = 0.0;       // max over cases of lhs - rhs, relative
  double max_confusion_excess = 0.0;
  bool pass = false;
};

/// Random classical-quantum states on (V, U, B) with |V|, |U|, dim B <= 3,
/// alpha in {0.1, 0.25, 0.4} and R + R_S in {1, 2, 3}.
Lemma2SuiteResult lemma2_suite(std::uint64_t seed, int bundles = 50);

struct Lemma1Cell {
  int family = 0;
  std::int64_t subcodebook_size = 0;
  double alpha = 0.0;
  double empirical_mean = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct Lemma1SuiteResult {
  std::vector<Lemma1Cell> cells;
  bool all_within_bound = false;
  bool monotone_in_size = false;  // empirical mean nonincreasing in L
  bool pass = false;
};

/// Random qubit classical-quantum families, L in {2, 4, 8}, alpha in
/// {0.1, 0.25}, `samples` subcodebook draws per cell.
Lemma1SuiteResult lemma1_suite(std::uint64_t seed, int families = 10, int samples = 500);

}  // namespace qadc
