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

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "hqcs/error.h"
#include "test_util.h"

namespace hqcs {
namespace {

using testing::encode;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an hqcs::Error";
  return ErrorCode::kInvalidArgument;
}

TEST(AmplitudeEncode, NormalizesPythagoreanTriple) {
  const auto s = encode({3.0, 4.0}, Label::kClass0);
  ASSERT_EQ(s.dimension(), 2u);
  EXPECT_DOUBLE_EQ(s.amplitudes()[0], 0.6);
  EXPECT_DOUBLE_EQ(s.amplitudes()[1], 0.8);
  EXPECT_EQ(s.label(), Label::kClass0);
}

TEST(AmplitudeEncode, UnitVectorUnchanged) {
  const auto s = encode({1.0, 0.0, 0.0}, Label::kClass1);
  EXPECT_EQ(s.amplitudes()[0], 1.0);
  EXPECT_EQ(s.amplitudes()[1], 0.0);
  EXPECT_EQ(s.amplitudes()[2], 0.0);
  EXPECT_EQ(s.label(), Label::kClass1);
}

TEST(AmplitudeEncode, RejectsZeroAndNonFinite) {
  EXPECT_EQ(code_of([] { encode({0.0, 0.0}); }), ErrorCode::kZeroNorm);
  EXPECT_EQ(code_of([] { encode({1.0, std::nan("")}); }),
            ErrorCode::kNonFinite);
  EXPECT_EQ(code_of([] {
              encode({std::numeric_limits<double>::infinity(), 1.0});
            }),
            ErrorCode::kNonFinite);
  EXPECT_EQ(code_of([] { encode({}); }), ErrorCode::kZeroNorm);
}

TEST(AmplitudeEncode, UnitNormOverRandomInputs) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const std::size_t dim = 1 + rng() % 12;
    std::vector<double> x(dim);
    const double scale = std::ldexp(1.0, static_cast<int>(rng() % 80) - 40);
    for (double& v : x) v = scale * standard_normal(rng);
    const auto s = encode(x);
    double norm2 = 0.0;
    for (double a : s.amplitudes()) norm2 += a * a;
    EXPECT_LE(std::abs(std::sqrt(norm2) - 1.0), 1e-12);
  }
}

TEST(AmplitudeEncode, HugeAndTinyMagnitudesDoNotOverflow) {
  const auto big = encode({3e300, 4e300});
  EXPECT_NEAR(big.amplitudes()[0], 0.6, 1e-15);
  const auto small = encode({3e-310, 4e-310});
  EXPECT_NEAR(small.amplitudes()[1], 0.8, 1e-15);
}

TEST(AmplitudeEncode, PowerOfTwoScalingIsBitwiseInvariant) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(5);
    for (double& v : x) v = standard_normal(rng);
    std::vector<double> y = x;
    const int e = static_cast<int>(rng() % 60) - 30;
    for (double& v : y) v = std::ldexp(v, e);
    const auto a = encode(x);
    const auto b = encode(y);
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_EQ(a.amplitudes()[i], b.amplitudes()[i]);
    }
  }
}

TEST(AmplitudeEncode, GeneralPositiveScalingAgreesToRounding) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(4);
    for (double& v : x) v = standard_normal(rng);
    std::vector<double> y = x;
    const double c = 0.1 + 10.0 * uniform01(rng);
    for (double& v : y) v *= c;
    const auto a = encode(x);
    const auto b = encode(y);
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_NEAR(a.amplitudes()[i], b.amplitudes()[i], 4e-16);
    }
  }
}

TEST(EncodedSample, FromUnitAmplitudesChecksNorm) {
  EXPECT_NO_THROW(EncodedSample::from_unit_amplitudes({0.6, 0.8},
                                                      Label::kClass0));
  EXPECT_THROW(EncodedSample::from_unit_amplitudes({0.6, 0.9}, Label::kClass0),
               Error);
}

TEST(Overlap, HandExamples) {
  const auto e0 = encode({1.0, 0.0});
  const auto e1 = encode({0.0, 1.0});
  const auto v = encode({0.6, 0.8});
  EXPECT_EQ(overlap(e0, e1), 0.0);
  EXPECT_EQ(overlap(v, v), 1.0);
  EXPECT_DOUBLE_EQ(overlap(e0, v), 0.6);
}

TEST(Overlap, AbsoluteValueOfSignedDot) {
  const auto u = encode({1.0, 1.0});
  const auto v = encode({-1.0, -1.0});
  EXPECT_EQ(overlap(u, v), 1.0);
  const auto w = encode({-3.0, 4.0});
  EXPECT_NEAR(overlap(encode({1.0, 0.0}), w), 0.6, 1e-16);
}

TEST(Overlap, SymmetricAndBounded) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = 1 + rng() % 6;
    const auto u = random_unit_sample(rng, dim);
    const auto v = random_unit_sample(rng, dim);
    const double uv = overlap(u, v);
    EXPECT_EQ(uv, overlap(v, u));
    EXPECT_GE(uv, 0.0);
    EXPECT_LE(uv, 1.0);
  }
}

TEST(Overlap, DimensionMismatch) {
  EXPECT_EQ(code_of([] { overlap(encode({1.0, 0.0}), encode({1.0, 0.0, 0.0})); }),
            ErrorCode::kDimensionMismatch);
}

TEST(BinaryDataset, RelabelsAndIndexesClassZeroFirst) {
  BinaryDataset ds({encode({1.0, 0.0}, Label::kClass1)},
                   {encode({0.0, 1.0}), encode({1.0, 1.0})});
  EXPECT_EQ(ds.size0(), 1u);
  EXPECT_EQ(ds.size1(), 2u);
  EXPECT_EQ(ds.class0()[0].label(), Label::kClass0);
  EXPECT_EQ(ds.class1()[1].label(), Label::kClass1);
  EXPECT_EQ(ds.at(0).amplitudes()[0], 1.0);
  EXPECT_EQ(ds.at(1).amplitudes()[1], 1.0);
  EXPECT_EQ(ds.dimension(), 2u);
}

TEST(BinaryDataset, RejectsEmptyClassAndMixedDimensions) {
  EXPECT_EQ(code_of([] { BinaryDataset({}, {encode({1.0})}); }),
            ErrorCode::kEmptyClass);
  EXPECT_EQ(code_of([] {
              BinaryDataset({encode({1.0, 0.0})}, {encode({1.0, 0.0, 0.0})});
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(BinaryDataset, SwappedExchangesClasses) {
  BinaryDataset ds({encode({1.0, 0.0})}, {encode({0.0, 1.0}), encode({1.0, 1.0})});
  const auto sw = ds.swapped();
  EXPECT_EQ(sw.size0(), 2u);
  EXPECT_EQ(sw.size1(), 1u);
  EXPECT_EQ(sw.class0()[0].label(), Label::kClass0);
  EXPECT_EQ(sw.class1()[0].amplitudes()[0], 1.0);
}

TEST(BinaryDataset, FromSamplesSplitsByLabel) {
  const std::vector<EncodedSample> samples = {
      encode({1.0, 0.0}, Label::kClass1), encode({0.0, 1.0}, Label::kClass0),
      encode({1.0, 1.0}, Label::kClass1)};
  const auto ds = BinaryDataset::from_samples(samples);
  EXPECT_EQ(ds.size0(), 1u);
  EXPECT_EQ(ds.size1(), 2u);
}

TEST(CopyCount, RejectsNonPositiveAndNonFinite) {
  EXPECT_NO_THROW(CopyCount(0.25));
  EXPECT_THROW(CopyCount(0.0), Error);
  EXPECT_THROW(CopyCount(-1.0), Error);
  EXPECT_THROW(CopyCount(std::nan("")), Error);
  EXPECT_THROW(CopyCount(std::numeric_limits<double>::infinity()), Error);
}

}  // namespace
}  // namespace hqcs
