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

#include "hqcs/difficulty.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace hqcs {

namespace {

void check_attribute_count(const RawSample& s, const AttributeStats& stats) {
  if (s.features.size() != stats.attribute_count()) {
    throw Error(ErrorCode::kStatsMismatch,
                "sample has " + std::to_string(s.features.size()) +
                    " attributes, stats describe " +
                    std::to_string(stats.attribute_count()));
  }
}

}  // namespace

AttributeStats compute_attribute_stats(std::span<const RawSample> samples,
                                       std::span<const AttributeKind> kinds) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyInput, "no samples");
  const std::size_t m = samples.front().features.size();
  for (const auto& s : samples) {
    if (s.features.size() != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "samples differ in attribute count");
    }
  }
  if (!kinds.empty() && kinds.size() != m) {
    throw Error(ErrorCode::kStatsMismatch,
                "attribute kinds do not match the attribute count");
  }

  AttributeStats stats;
  stats.kinds = kinds.empty()
                    ? std::vector<AttributeKind>(m, AttributeKind::kNumeric)
                    : std::vector<AttributeKind>(kinds.begin(), kinds.end());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  stats.mean.assign(m, nan);
  stats.stddev.assign(m, nan);
  stats.class_frequency.resize(m);

  for (std::size_t a = 0; a < m; ++a) {
    if (stats.kinds[a] == AttributeKind::kNumeric) {
      double sum = 0.0;
      std::size_t n = 0;
      for (const auto& s : samples) {
        if (!std::isnan(s.features[a])) {
          sum += s.features[a];
          ++n;
        }
      }
      if (n == 0) {
        stats.mean[a] = 0.0;
        stats.stddev[a] = 0.0;
        continue;
      }
      const double mean = sum / static_cast<double>(n);
      double ss = 0.0;
      for (const auto& s : samples) {
        if (!std::isnan(s.features[a])) {
          ss += (s.features[a] - mean) * (s.features[a] - mean);
        }
      }
      stats.mean[a] = mean;
      stats.stddev[a] = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    } else {
      std::map<double, std::array<double, 2>> counts;
      for (const auto& s : samples) {
        if (std::isnan(s.features[a])) continue;
        counts[s.features[a]][static_cast<std::size_t>(to_int(s.label))] += 1.0;
      }
      for (auto& [value, row] : counts) {
        const double total = row[0] + row[1];
        row[0] /= total;
        row[1] /= total;
      }
      stats.class_frequency[a] = std::move(counts);
    }
  }
  return stats;
}

double hvdm_distance(const RawSample& x, const RawSample& y,
                     const AttributeStats& stats) {
  check_attribute_count(x, stats);
  check_attribute_count(y, stats);
  double sum = 0.0;
  for (std::size_t a = 0; a < stats.attribute_count(); ++a) {
    const double xv = x.features[a];
    const double yv = y.features[a];
    double d;
    if (std::isnan(xv) || std::isnan(yv)) {
      d = 1.0;
    } else if (stats.kinds[a] == AttributeKind::kNumeric) {
      const double sigma = stats.stddev[a];
      if (xv == yv) {
        d = 0.0;
      } else if (sigma > 0.0) {
        d = std::min(std::abs(xv - yv) / (4.0 * sigma), 1.0);
      } else {
        d = 1.0;
      }
    } else {
      const auto& table = stats.class_frequency[a];
      const auto ix = table.find(xv);
      const auto iy = table.find(yv);
      if (ix == table.end() || iy == table.end()) {
        d = xv == yv ? 0.0 : 1.0;
      } else {
        const double d0 = ix->second[0] - iy->second[0];
        const double d1 = ix->second[1] - iy->second[1];
        d = std::sqrt(d0 * d0 + d1 * d1);
      }
    }
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::string_view point_type_name(PointType type) {
  switch (type) {
    case PointType::kSafe: return "safe";
    case PointType::kBorderline: return "borderline";
    case PointType::kRare: return "rare";
    case PointType::kOutlier: return "outlier";
  }
  return "unknown";
}

PointType classify_point_type(std::span<const RawSample> samples,
                              std::size_t index, const AttributeStats& stats) {
  if (index >= samples.size()) {
    throw Error(ErrorCode::kInvalidArgument, "point index out of range");
  }
  if (samples.size() < kDifficultyNeighbours + 1) {
    throw Error(ErrorCode::kTooFewSamples,
                "typing needs at least " +
                    std::to_string(kDifficultyNeighbours) +
                    " other points, dataset has " +
                    std::to_string(samples.size()));
  }
  std::vector<std::pair<double, std::size_t>> neighbours;
  neighbours.reserve(samples.size() - 1);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    if (j == index) continue;
    neighbours.emplace_back(hvdm_distance(samples[index], samples[j], stats),
                            j);
  }
  // Pair ordering breaks distance ties by the smaller sample index.
  std::partial_sort(neighbours.begin(),
                    neighbours.begin() + kDifficultyNeighbours,
                    neighbours.end());
  std::size_t same = 0;
  for (std::size_t n = 0; n < kDifficultyNeighbours; ++n) {
    if (samples[neighbours[n].second].label == samples[index].label) ++same;
  }
  if (same >= 4) return PointType::kSafe;
  if (same >= 2) return PointType::kBorderline;
  if (same == 1) return PointType::kRare;
  return PointType::kOutlier;
}

DifficultyProfile categorize_dataset(std::span<const RawSample> samples,
                                     const AttributeStats& stats,
                                     TypingScope scope) {
  std::size_t count0 = 0;
  for (const auto& s : samples) count0 += s.label == Label::kClass0 ? 1 : 0;
  const std::size_t count1 = samples.size() - count0;

  DifficultyProfile profile;
  profile.types.resize(samples.size());
  profile.counted.assign(samples.size(), true);
  if (scope == TypingScope::kMinorityClass && count0 != count1) {
    const Label minority = count0 < count1 ? Label::kClass0 : Label::kClass1;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      profile.counted[i] = samples[i].label == minority;
    }
  }

  std::array<std::size_t, 4> tally{};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    profile.types[i] = classify_point_type(samples, i, stats);
    if (profile.counted[i]) {
      ++tally[static_cast<std::size_t>(profile.types[i])];
      ++profile.counted_points;
    }
  }
  const double denom = static_cast<double>(profile.counted_points);
  profile.safe_pct = 100.0 * static_cast<double>(tally[0]) / denom;
  profile.borderline_pct = 100.0 * static_cast<double>(tally[1]) / denom;
  profile.rare_pct = 100.0 * static_cast<double>(tally[2]) / denom;
  profile.outlier_pct = 100.0 * static_cast<double>(tally[3]) / denom;
  return profile;
}

}  // namespace hqcs
