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

#include "hqcs/core.h"

#include <algorithm>
#include <string>

namespace hqcs {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroNorm: return "ZeroNorm";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kEmptyClass: return "EmptyClass";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kNonIntegerK: return "NonIntegerK";
    case ErrorCode::kEigenFailure: return "EigenFailure";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kStatsMismatch: return "StatsMismatch";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kMissingLabelColumn: return "MissingLabelColumn";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMoreThanTwoClasses: return "MoreThanTwoClasses";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

constexpr double kNormTolerance = 1e-12;

double squared_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return sum;
}

}  // namespace

EncodedSample EncodedSample::from_unit_amplitudes(
    std::vector<double> amplitudes, Label label) {
  if (amplitudes.empty()) {
    throw Error(ErrorCode::kZeroNorm, "empty amplitude vector");
  }
  for (double x : amplitudes) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNonFinite, "amplitude is not finite");
    }
  }
  double norm = std::sqrt(squared_norm(amplitudes));
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kZeroNorm,
                "amplitudes are not unit norm (norm = " +
                    std::to_string(norm) + ")");
  }
  return EncodedSample(std::move(amplitudes), label);
}

BinaryDataset::BinaryDataset(std::vector<EncodedSample> class0,
                             std::vector<EncodedSample> class1)
    : class0_(std::move(class0)), class1_(std::move(class1)) {
  if (class0_.empty() || class1_.empty()) {
    throw Error(ErrorCode::kEmptyClass,
                "both classes need at least one sample (class 0: " +
                    std::to_string(class0_.size()) + ", class 1: " +
                    std::to_string(class1_.size()) + ")");
  }
  const std::size_t dim = class0_.front().dimension();
  for (auto* group : {&class0_, &class1_}) {
    for (const auto& s : *group) {
      if (s.dimension() != dim) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "samples have differing dimensions");
      }
    }
  }
  for (auto& s : class0_) s = s.with_label(Label::kClass0);
  for (auto& s : class1_) s = s.with_label(Label::kClass1);
}

BinaryDataset BinaryDataset::from_samples(
    std::span<const EncodedSample> samples) {
  std::vector<EncodedSample> c0, c1;
  for (const auto& s : samples) {
    (s.label() == Label::kClass0 ? c0 : c1).push_back(s);
  }
  return BinaryDataset(std::move(c0), std::move(c1));
}

const EncodedSample& BinaryDataset::at(std::size_t combined_index) const {
  if (combined_index < class0_.size()) return class0_[combined_index];
  return class1_.at(combined_index - class0_.size());
}

BinaryDataset BinaryDataset::swapped() const {
  return BinaryDataset(class1_, class0_);
}

CopyCount::CopyCount(double k) : k_(k) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "copy count must be positive and finite, got " +
                    std::to_string(k));
  }
}

EncodedSample amplitude_encode(const RawSample& raw) {
  const auto& x = raw.features;
  if (x.empty()) throw Error(ErrorCode::kZeroNorm, "empty feature vector");
  double max_abs = 0.0;
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFinite, "feature value is not finite");
    }
    max_abs = std::max(max_abs, std::abs(v));
  }
  if (max_abs == 0.0) {
    throw Error(ErrorCode::kZeroNorm, "feature vector is all zeros");
  }
  // Exact rescale so the largest entry lies in [0.5, 1).
  int exponent = 0;
  std::frexp(max_abs, &exponent);
  std::vector<double> amplitudes(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    amplitudes[i] = std::ldexp(x[i], -exponent);
  }
  const double norm = std::sqrt(squared_norm(amplitudes));
  for (double& a : amplitudes) a /= norm;
  return EncodedSample(std::move(amplitudes), raw.label);
}

double overlap(const EncodedSample& u, const EncodedSample& v) {
  if (u.dimension() != v.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "overlap of vectors with dimensions " +
                    std::to_string(u.dimension()) + " and " +
                    std::to_string(v.dimension()));
  }
  auto a = u.amplitudes();
  auto b = v.amplitudes();
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  double result = std::abs(dot);
  if (result > 1.0 - 1e-12) {
    // Identical states must produce exactly 1 so that cross-class duplicates
    // are recognized as indistinguishable downstream.
    const bool same = std::equal(a.begin(), a.end(), b.begin());
    const bool negated = std::equal(
        a.begin(), a.end(), b.begin(),
        [](double p, double q) { return p == -q; });
    if (same || negated) return 1.0;
  }
  return std::min(result, 1.0);
}

}  // namespace hqcs
