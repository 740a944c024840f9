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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qadc/errors.hpp"

namespace qadc {

// splitmix64 in counter mode. All randomness in the library flows through
// this generator so that results are identical across platforms and worker
// counts; no std:: distributions are used anywhere.
inline constexpr const char* kGeneratorName = "splitmix64-counter";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller on explicit uniforms.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> next_complex_gaussian() {
    double re = next_gaussian();
    double im = next_gaussian();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

  /// Uniform integer in [0, n).
  int next_index(int n) { return static_cast<int>(next_double() * n) % n; }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Seed mixing for independent streams: child i of a master seed is
/// splitmix64 applied once to master XOR ((i + 1) * 0xD1B54A32D192ED03).
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ ((index + 1) * 0xD1B54A32D192ED03ULL);
  return Rng(s).next_u64();
}

/// Sample an index from an unnormalized nonnegative weight vector by
/// inverse CDF. Throws BadDistribution when the total mass is not positive.
inline int sample_discrete(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw BadDistribution("distribution has no mass");
  double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  // Fall through on rounding at the top end: last index with positive mass.
  for (int i = static_cast<int>(weights.size()) - 1; i >= 0; --i)
    if (weights[i] > 0.0) return i;
  return static_cast<int>(weights.size()) - 1;
}

}  // namespace qadc
