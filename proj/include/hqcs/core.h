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

#ifndef HQCS_CORE_H_
#define HQCS_CORE_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hqcs/error.h"

namespace hqcs {

/// Binary class tag. Class 0 is the "positive" class throughout.
enum class Label : std::uint8_t { kClass0 = 0, kClass1 = 1 };

inline Label other(Label label) {
  return label == Label::kClass0 ? Label::kClass1 : Label::kClass0;
}

inline int to_int(Label label) { return static_cast<int>(label); }

/// A feature vector in dataset units. NaN marks a missing value; such samples
/// can be profiled for difficulty but not amplitude-encoded.
struct RawSample {
  std::vector<double> features;
  Label label = Label::kClass0;
};

/// Unit-norm state vector. Only constructible through amplitude_encode or
/// from_unit_amplitudes, both of which check the norm.
class EncodedSample {
 public:
  /// Wraps amplitudes that are already normalized. Throws kZeroNorm if the
  /// norm differs from 1 by more than 1e-12.
  static EncodedSample from_unit_amplitudes(std::vector<double> amplitudes,
                                            Label label);

  std::span<const double> amplitudes() const { return amplitudes_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  Label label() const { return label_; }

  EncodedSample with_label(Label label) const {
    EncodedSample copy = *this;
    copy.label_ = label;
    return copy;
  }

 private:
  EncodedSample(std::vector<double> amplitudes, Label label)
      : amplitudes_(std::move(amplitudes)), label_(label) {}

  friend EncodedSample amplitude_encode(const RawSample& raw);

  std::vector<double> amplitudes_;
  Label label_;
};

/// Training data split by class. Both classes are nonempty and every sample
/// shares one dimension. Samples are addressed either per class or through a
/// combined index where class 0 comes first.
class BinaryDataset {
 public:
  BinaryDataset(std::vector<EncodedSample> class0,
                std::vector<EncodedSample> class1);

  /// Splits a mixed list by label.
  static BinaryDataset from_samples(std::span<const EncodedSample> samples);

  const std::vector<EncodedSample>& class0() const { return class0_; }
  const std::vector<EncodedSample>& class1() const { return class1_; }
  std::size_t size0() const { return class0_.size(); }
  std::size_t size1() const { return class1_.size(); }
  std::size_t size() const { return class0_.size() + class1_.size(); }
  std::size_t dimension() const { return class0_.front().dimension(); }

  const EncodedSample& at(std::size_t combined_index) const;

  /// Same samples with every label flipped and the classes exchanged.
  BinaryDataset swapped() const;

 private:
  std::vector<EncodedSample> class0_;
  std::vector<EncodedSample> class1_;
};

/// Number of state copies, a positive finite real.
class CopyCount {
 public:
  explicit CopyCount(double k);
  double value() const { return k_; }

 private:
  double k_;
};

/// Normalizes the feature vector to unit Euclidean norm. The vector is first
/// rescaled by a power of two so that inputs differing by a power-of-two
/// factor encode to bitwise identical amplitudes.
EncodedSample amplitude_encode(const RawSample& raw);

/// |<u|v>| clamped into [0, 1]. Samples equal up to sign give exactly 1.
double overlap(const EncodedSample& u, const EncodedSample& v);

}  // namespace hqcs

#endif  // HQCS_CORE_H_
