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

#ifndef HQCS_DIFFICULTY_H_
#define HQCS_DIFFICULTY_H_

// Dataset difficulty profiling: every point is typed from the class make-up
// of its five nearest neighbours under the Heterogeneous Value Difference
// Metric (HVDM).

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "hqcs/core.h"

namespace hqcs {

enum class AttributeKind { kNumeric, kCategorical };

struct AttributeStats {
  std::vector<AttributeKind> kinds;
  // Numeric attributes; NaN for categorical ones.
  std::vector<double> mean;
  std::vector<double> stddev;
  // Categorical attributes: value -> (P(class 0 | value), P(class 1 | value)).
  // Empty for numeric attributes.
  std::vector<std::map<double, std::array<double, 2>>> class_frequency;

  std::size_t attribute_count() const { return kinds.size(); }
};

/// Means and sample standard deviations ignore missing (NaN) values. An empty
/// `kinds` means every attribute is numeric.
AttributeStats compute_attribute_stats(std::span<const RawSample> samples,
                                       std::span<const AttributeKind> kinds = {});

/// sqrt(sum_a d_a^2) with
///   numeric:     min(|x - y| / (4 sigma), 1)
///   categorical: sqrt(sum_c (P(c|x) - P(c|y))^2)
///   missing:     1
double hvdm_distance(const RawSample& x, const RawSample& y,
                     const AttributeStats& stats);

enum class PointType { kSafe, kBorderline, kRare, kOutlier };

std::string_view point_type_name(PointType type);

inline constexpr std::size_t kDifficultyNeighbours = 5;

/// Types samples[index] from its 5 nearest neighbours (itself excluded,
/// distance ties broken by smaller index): 5 or 4 same-class neighbours is
/// safe, 3 or 2 borderline, 1 rare, 0 outlier.
PointType classify_point_type(std::span<const RawSample> samples,
                              std::size_t index, const AttributeStats& stats);

/// Which points contribute to the dataset percentages.
enum class TypingScope {
  kMinorityClass,  // the smaller class; all points when both are equal
  kAllPoints,
};

struct DifficultyProfile {
  double safe_pct = 0.0;
  double borderline_pct = 0.0;
  double rare_pct = 0.0;
  double outlier_pct = 0.0;
  std::vector<PointType> types;  // every point, in input order
  std::vector<bool> counted;     // whether the point is in the percentages
  std::size_t counted_points = 0;
};

DifficultyProfile categorize_dataset(
    std::span<const RawSample> samples, const AttributeStats& stats,
    TypingScope scope = TypingScope::kMinorityClass);

}  // namespace hqcs

#endif  // HQCS_DIFFICULTY_H_
