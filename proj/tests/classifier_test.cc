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

#include "hqcs/classifier.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "hqcs/error.h"
#include "hqcs/oracle.h"
#include "test_util.h"

namespace hqcs {
namespace {

using testing::encode;
using testing::random_dataset;

BinaryDataset orthogonal_pair() {
  return BinaryDataset({encode({1.0, 0.0})}, {encode({0.0, 1.0})});
}

TEST(OverlapCache, OrthonormalBasisExample) {
  const std::vector<EncodedSample> test = {encode({1.0, 0.0})};
  const auto cache = build_overlap_cache(test, orthogonal_pair());
  ASSERT_EQ(cache.test_count(), 1u);
  EXPECT_EQ(cache.test_vs_class0(0, 0), 1.0);
  EXPECT_EQ(cache.test_vs_class1(0, 0), 0.0);
  EXPECT_EQ(cache.cross_train(0, 0), 0.0);
}

TEST(OverlapCache, EmptyTestListKeepsTrainBlock) {
  std::mt19937_64 rng(1);
  const auto train = random_dataset(rng, 3, 2, 4);
  const auto cache = build_overlap_cache({}, train);
  EXPECT_EQ(cache.test_count(), 0u);
  EXPECT_EQ(cache.test_vs_class0.cols(), 2);
  EXPECT_EQ(cache.test_vs_class1.cols(), 4);
  EXPECT_EQ(cache.size0(), 2u);
  EXPECT_EQ(cache.size1(), 4u);
}

TEST(OverlapCache, EntriesEqualDirectOverlaps) {
  std::mt19937_64 rng(2);
  const auto train = random_dataset(rng, 3, 3, 3);
  std::vector<EncodedSample> test;
  for (int i = 0; i < 3; ++i) test.push_back(random_unit_sample(rng, 3));
  const auto cache = build_overlap_cache(test, train);
  for (int t = 0; t < 3; ++t) {
    for (int a = 0; a < 3; ++a) {
      EXPECT_EQ(cache.test_vs_class0(t, a), overlap(test[t], train.class0()[a]));
      EXPECT_EQ(cache.test_vs_class1(t, a), overlap(test[t], train.class1()[a]));
      EXPECT_EQ(cache.cross_train(t, a),
                overlap(train.class0()[t], train.class1()[a]));
    }
  }
}

TEST(OverlapCache, DimensionMismatch) {
  const std::vector<EncodedSample> test = {encode({1.0, 0.0, 0.0})};
  EXPECT_THROW(build_overlap_cache(test, orthogonal_pair()), Error);
}

TEST(FidPairScore, HandExamples) {
  EXPECT_EQ(fid_pair_score(1.0, 0.0, CopyCount(1.0)), 1.0);
  EXPECT_EQ(fid_pair_score(0.37, 0.37, CopyCount(2.5)), 0.0);
  // 0.6^4 - 0.8^4 = 0.1296 - 0.4096.
  EXPECT_NEAR(fid_pair_score(0.6, 0.8, CopyCount(2.0)), -0.28, 1e-15);
}

TEST(FidPairScore, PowerLawConsistency) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const double oa = uniform01(rng);
    const double ob = uniform01(rng);
    const double k = 0.25 + 10.0 * uniform01(rng);
    EXPECT_NEAR(fid_pair_score(oa, ob, CopyCount(2.0 * k)),
                fid_pair_score(oa * oa, ob * ob, CopyCount(k)), 1e-12);
  }
}

TEST(FidPairScore, VanishesAsCopyCountShrinks) {
  for (double oa : {0.1, 0.3, 0.5, 0.9}) {
    for (double ob : {0.05, 0.4, 0.7, 0.95}) {
      EXPECT_LE(std::abs(fid_pair_score(oa, ob, CopyCount(1e-6))), 1e-5);
    }
  }
}

TEST(PairEigenvalue, HandExamples) {
  EXPECT_EQ(pair_eigenvalue(0.0, CopyCount(1.0)), 1.0);
  EXPECT_NEAR(pair_eigenvalue(0.6, CopyCount(1.0)), 0.8, 1e-15);
  // sqrt(1 - 0.9^8), with 0.9^8 = 0.43046721.
  EXPECT_NEAR(pair_eigenvalue(0.9, CopyCount(4.0)), std::sqrt(1.0 - 0.43046721),
              1e-15);
  EXPECT_NEAR(pair_eigenvalue(0.9, CopyCount(4.0)), 0.7546740, 1e-7);
}

TEST(PairEigenvalue, IdenticalStatesAreDegenerate) {
  for (double k : {0.25, 1.0, 7.0, 100.0}) {
    try {
      pair_eigenvalue(1.0, CopyCount(k));
      ADD_FAILURE() << "expected DegeneratePair";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegeneratePair);
    }
    EXPECT_FALSE(try_pair_eigenvalue(1.0, CopyCount(k)).has_value());
  }
}

TEST(PairEigenvalue, NearOneStaysAccurate) {
  // 1 - (1 - e)^2 = 2e - e^2 for e = 1e-9.
  const double e = 1e-9;
  const double expected = std::sqrt(2.0 * e - e * e);
  EXPECT_NEAR(pair_eigenvalue(1.0 - e, CopyCount(1.0)) / expected, 1.0, 1e-6);
}

TEST(FidelityKernel, HandExamples) {
  EXPECT_EQ(fidelity_kernel(1.0, CopyCount(5.0)), 1.0);
  EXPECT_EQ(fidelity_kernel(0.0, CopyCount(0.25)), 0.0);
  const double expected = std::pow(0.9, 100.0);
  EXPECT_NEAR(fidelity_kernel(0.9, CopyCount(50.0)) / expected, 1.0, 1e-13);
  EXPECT_NEAR(fidelity_kernel(0.9, CopyCount(50.0)), 2.6561e-5, 5e-10);
}

TEST(PoweredOverlap, UnderflowFlushesToZero) {
  EXPECT_EQ(powered_overlap(1e-200, CopyCount(100.0)), 0.0);
  EXPECT_GT(powered_overlap(0.5, CopyCount(100.0)), 0.0);
}

TEST(FidScore, BasisExamples) {
  const auto train = orthogonal_pair();
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<EncodedSample> test = {
      encode({1.0, 0.0}), EncodedSample::from_unit_amplitudes({r, r},
                                                              Label::kClass0)};
  const auto cache = build_overlap_cache(test, train);
  EXPECT_EQ(fid_score(cache, 0, CopyCount(1.0)), 1.0);
  for (double k : {0.25, 1.0, 3.0, 100.0}) {
    EXPECT_EQ(fid_score(cache, 1, CopyCount(k)), 0.0);
  }
}

TEST(FidScore, MatchesDirectSummation) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto train = random_dataset(rng, 4, 2, 2);
    const std::vector<EncodedSample> test = {random_unit_sample(rng, 4)};
    const auto cache = build_overlap_cache(test, train);
    double expected = 0.0;
    for (const auto& a : train.class0()) {
      expected += 0.5 * std::pow(overlap(test[0], a), 6.0);
    }
    for (const auto& b : train.class1()) {
      expected -= 0.5 * std::pow(overlap(test[0], b), 6.0);
    }
    EXPECT_NEAR(fid_score(cache, 0, CopyCount(3.0)), expected, 1e-14);
  }
}

TEST(FidScore, KernelFormAgrees) {
  std::mt19937_64 rng(9);
  const auto train = random_dataset(rng, 5, 5, 7);
  std::vector<EncodedSample> test;
  for (int i = 0; i < 10; ++i) test.push_back(random_unit_sample(rng, 5));
  const auto cache = build_overlap_cache(test, train);
  const auto w = fidelity_kernel_weights(5, 7);
  double worst = 0.0;
  for (double k : {0.25, 0.5, 1.0, 1.75, 2.0, 3.0, 7.5, 12.0, 50.0, 100.0}) {
    for (std::size_t i = 0; i < test.size(); ++i) {
      worst = std::max(worst, std::abs(fid_score_kernel_form(cache, i,
                                                             CopyCount(k), w) -
                                       fid_score(cache, i, CopyCount(k))));
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(FidScore, KernelFormSinglePair) {
  const std::vector<EncodedSample> test = {encode({0.6, 0.8})};
  const auto cache = build_overlap_cache(test, orthogonal_pair());
  const std::vector<double> w = {1.0, -1.0};
  EXPECT_EQ(fid_score_kernel_form(cache, 0, CopyCount(2.0), w),
            fid_pair_score(0.6, 0.8, CopyCount(2.0)));
  EXPECT_THROW(fid_score_kernel_form(cache, 0, CopyCount(2.0),
                                     std::vector<double>{1.0}),
               Error);
}

TEST(HqcsScore, SinglePairBasis) {
  const std::vector<EncodedSample> test = {encode({1.0, 0.0})};
  const auto cache = build_overlap_cache(test, orthogonal_pair());
  const auto s = hqcs_score(cache, 0, CopyCount(1.0));
  EXPECT_EQ(s.score, 1.0);
  EXPECT_EQ(s.skipped_pairs, 0u);
}

TEST(HqcsScore, CrossClassDuplicateIsSkipped) {
  std::mt19937_64 rng(10);
  const auto shared = random_unit_sample(rng, 3);
  BinaryDataset train({shared, random_unit_sample(rng, 3)},
                      {shared.with_label(Label::kClass1)});
  const std::vector<EncodedSample> test = {random_unit_sample(rng, 3)};
  const auto cache = build_overlap_cache(test, train);
  const auto s = hqcs_score(cache, 0, CopyCount(2.0));
  EXPECT_EQ(s.skipped_pairs, 1u);
  // Only the (class0[1], class1[0]) pair contributes.
  const double o = cache.cross_train(1, 0);
  const double expected =
      fid_pair_score(cache.test_vs_class0(0, 1), cache.test_vs_class1(0, 0),
                     CopyCount(2.0)) /
      std::sqrt(1.0 - std::pow(o, 4.0)) / 2.0;
  EXPECT_NEAR(s.score, expected, 1e-14);
}

TEST(HqcsScore, MatchesIndependentPairSum) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const auto train = random_dataset(rng, 3, 3, 2);
    const std::vector<EncodedSample> test = {random_unit_sample(rng, 3)};
    const auto cache = build_overlap_cache(test, train);
    const double k = 0.25 * static_cast<double>(1 + rng() % 40);
    double expected = 0.0;
    for (const auto& a : train.class0()) {
      for (const auto& b : train.class1()) {
        const double ab = overlap(a, b);
        const double lambda = std::sqrt(1.0 - std::pow(ab, 2.0 * k));
        expected += (std::pow(overlap(test[0], a), 2.0 * k) -
                     std::pow(overlap(test[0], b), 2.0 * k)) /
                    lambda;
      }
    }
    expected /= 6.0;
    EXPECT_NEAR(hqcs_score(cache, 0, CopyCount(k)).score, expected, 1e-12);
  }
}

TEST(HqcsScore, SingleSampleClassesMatchOracleWithZeroSignConvention) {
  std::mt19937_64 rng(14);
  oracle::Options options;
  options.zero_sign = oracle::ZeroEigenvalueSign::kZero;
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = 2 + rng() % 3;
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto train = random_dataset(rng, dim, 1, 1);
    const std::vector<EncodedSample> test = {random_unit_sample(rng, dim)};
    const auto cache = build_overlap_cache(test, train);
    EXPECT_NEAR(hqcs_score(cache, 0, CopyCount(k)).score,
                oracle::hqc_score_naive(test[0], train, k, options), 1e-9);
  }
}

TEST(HqcsScore, InSpanSinglePairMatchesOracleDefault) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 60; ++t) {
    const auto train = random_dataset(rng, 2, 1, 1);
    const std::vector<EncodedSample> test = {random_unit_sample(rng, 2)};
    const auto cache = build_overlap_cache(test, train);
    EXPECT_NEAR(hqcs_score(cache, 0, CopyCount(1.0)).score,
                oracle::hqc_score_naive(test[0], train, 1), 1e-9);
  }
}

// The pairwise decomposition does not reproduce the Helstrom score once a
// class holds more than one state. Two orthogonal class-0 states against a
// third orthogonal class-1 state: the brute-force score of c = e1 is 1, the
// pair average is (1 + 0) / 2.
TEST(HqcsScore, MultiSampleCounterexampleToPairDecomposition) {
  BinaryDataset train({encode({1.0, 0.0, 0.0}), encode({0.0, 1.0, 0.0})},
                      {encode({0.0, 0.0, 1.0})});
  const std::vector<EncodedSample> test = {encode({1.0, 0.0, 0.0})};
  const auto cache = build_overlap_cache(test, train);
  EXPECT_EQ(hqcs_score(cache, 0, CopyCount(1.0)).score, 0.5);
  EXPECT_NEAR(oracle::hqc_score_naive(test[0], train, 1), 1.0, 1e-12);
  oracle::Options zero;
  zero.zero_sign = oracle::ZeroEigenvalueSign::kZero;
  EXPECT_NEAR(oracle::hqc_score_naive(test[0], train, 1, zero), 1.0, 1e-12);
}

TEST(Scores, SwapNegates) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m0 = 1 + rng() % 4;
    const std::size_t m1 = 1 + rng() % 4;
    const auto train = random_dataset(rng, 3, m0, m1);
    std::vector<EncodedSample> test = {random_unit_sample(rng, 3)};
    const auto cache = build_overlap_cache(test, train);
    const auto swapped = build_overlap_cache(test, train.swapped());
    const double k = 0.25 * static_cast<double>(1 + rng() % 20);
    EXPECT_EQ(fid_score(swapped, 0, CopyCount(k)),
              -fid_score(cache, 0, CopyCount(k)));
    const double h = hqcs_score(cache, 0, CopyCount(k)).score;
    const double hs = hqcs_score(swapped, 0, CopyCount(k)).score;
    if (m0 == 1 || m1 == 1) {
      EXPECT_EQ(hs, -h);
    } else {
      // Transposing the pair grid changes the summation order.
      EXPECT_NEAR(hs, -h, 1e-15);
    }
  }
}

// The per-pair bound follows from the spectrum of the tensor-power operator
// and is only checked for integer copy counts; fractional k can exceed it.
TEST(Scores, PerPairTermsAndFidAreBounded) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 2000; ++t) {
    const double oa = uniform01(rng);
    const double ob = uniform01(rng);
    const double k = static_cast<double>(1 + rng() % 100);
    // Sample a pair overlap consistent with the two test overlaps.
    const double theta_a = std::acos(oa);
    const double theta_b = std::acos(ob);
    const double ab = std::abs(std::cos(theta_a - theta_b));
    const auto lambda = try_pair_eigenvalue(ab, CopyCount(k));
    if (!lambda) continue;
    const double term = fid_pair_score(oa, ob, CopyCount(k)) / *lambda;
    EXPECT_LE(std::abs(term), 1.0 + 1e-12);
  }
  const auto train = random_dataset(rng, 4, 6, 5);
  std::vector<EncodedSample> test;
  for (int i = 0; i < 20; ++i) test.push_back(random_unit_sample(rng, 4));
  const auto cache = build_overlap_cache(test, train);
  for (std::size_t i = 0; i < test.size(); ++i) {
    EXPECT_LE(std::abs(fid_score(cache, i, CopyCount(0.25))), 1.0);
    EXPECT_LE(std::abs(hqcs_score(cache, i, CopyCount(0.25)).score), 1.0);
  }
}

TEST(Predict, SignRule) {
  EXPECT_EQ(predict(0.37), Label::kClass0);
  EXPECT_EQ(predict(-0.01), Label::kClass1);
  EXPECT_EQ(predict(0.0), Label::kClass1);
  EXPECT_EQ(predict(-0.0), Label::kClass1);
  EXPECT_THROW(predict(std::nan("")), Error);
  EXPECT_THROW(predict(std::numeric_limits<double>::infinity()), Error);
}

TEST(ScoreAll, ConsistentWithSingleScores) {
  std::mt19937_64 rng(18);
  const auto train = random_dataset(rng, 3, 4, 3);
  std::vector<EncodedSample> test;
  for (int i = 0; i < 8; ++i) test.push_back(random_unit_sample(rng, 3));
  const auto cache = build_overlap_cache(test, train);
  for (auto id : {ClassifierId::kHqcs, ClassifierId::kFid}) {
    const auto report = score_all(cache, id, CopyCount(0.25));
    ASSERT_EQ(report.scores.size(), test.size());
    ASSERT_EQ(report.predictions.size(), test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
      EXPECT_TRUE(std::isfinite(report.scores[i]));
      EXPECT_EQ(report.predictions[i], predict(report.scores[i]));
      const double single = id == ClassifierId::kHqcs
                                ? hqcs_score(cache, i, CopyCount(0.25)).score
                                : fid_score(cache, i, CopyCount(0.25));
      EXPECT_EQ(report.scores[i], single);
    }
  }
  EXPECT_EQ(classifier_name(ClassifierId::kHqcs), "HQCS");
  EXPECT_EQ(classifier_name(ClassifierId::kFid), "FID");
}

}  // namespace
}  // namespace hqcs
