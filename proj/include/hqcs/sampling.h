// Copyright 2026 The HQCS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HQCS_SAMPLING_H_
#define HQCS_SAMPLING_H_

// Portable random helpers: results depend only on the seed, not on the
// standard library's distribution implementations.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hqcs/core.h"

namespace hqcs {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [lo, hi].
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

inline double standard_normal(std::mt19937_64& rng) {
  double u1;
  do {
    u1 = uniform01(rng);
  } while (u1 == 0.0);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

/// Haar-random real unit vector.
inline EncodedSample random_unit_sample(std::mt19937_64& rng,
                                        std::size_t dimension,
                                        Label label = Label::kClass0) {
  RawSample raw;
  raw.label = label;
  raw.features.resize(dimension);
  for (double& x : raw.features) x = standard_normal(rng);
  return amplitude_encode(raw);
}

}  // namespace hqcs

#endif  // HQCS_SAMPLING_H_
