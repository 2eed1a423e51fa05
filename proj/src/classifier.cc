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
#include <string>

namespace hqcs {

namespace {

constexpr double kDegenerateEigenvalue = 1e-12;

void check_index(const OverlapCache& cache, std::size_t test_index) {
  if (test_index >= cache.test_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "test index " + std::to_string(test_index) +
                    " out of range (" + std::to_string(cache.test_count()) +
                    " test points)");
  }
}

}  // namespace

std::string_view classifier_name(ClassifierId id) {
  return id == ClassifierId::kHqcs ? "HQCS" : "FID";
}

OverlapCache build_overlap_cache(std::span<const EncodedSample> test,
                                 const BinaryDataset& train) {
  const auto& c0 = train.class0();
  const auto& c1 = train.class1();
  const auto n_test = static_cast<Eigen::Index>(test.size());
  const auto m0 = static_cast<Eigen::Index>(c0.size());
  const auto m1 = static_cast<Eigen::Index>(c1.size());

  OverlapCache cache;
  cache.test_vs_class0.resize(n_test, m0);
  cache.test_vs_class1.resize(n_test, m1);
  cache.cross_train.resize(m0, m1);
  for (Eigen::Index t = 0; t < n_test; ++t) {
    for (Eigen::Index a = 0; a < m0; ++a) {
      cache.test_vs_class0(t, a) = overlap(test[t], c0[a]);
    }
    for (Eigen::Index b = 0; b < m1; ++b) {
      cache.test_vs_class1(t, b) = overlap(test[t], c1[b]);
    }
  }
  for (Eigen::Index a = 0; a < m0; ++a) {
    for (Eigen::Index b = 0; b < m1; ++b) {
      cache.cross_train(a, b) = overlap(c0[a], c1[b]);
    }
  }
  return cache;
}

double powered_overlap(double overlap, CopyCount k) {
  if (overlap <= 0.0) return 0.0;
  if (overlap >= 1.0) return 1.0;
  const double value = std::exp(2.0 * k.value() * std::log(overlap));
  return value < std::numeric_limits<double>::min() ? 0.0 : value;
}

double fid_pair_score(double oc_a, double oc_b, CopyCount k) {
  return powered_overlap(oc_a, k) - powered_overlap(oc_b, k);
}

std::optional<double> try_pair_eigenvalue(double ab_overlap, CopyCount k) {
  double radicand;
  if (ab_overlap <= 0.0) {
    radicand = 1.0;
  } else if (ab_overlap >= 1.0) {
    radicand = 0.0;
  } else {
    // 1 - o^(2k) without cancellation when o is close to 1.
    radicand = -std::expm1(2.0 * k.value() * std::log(ab_overlap));
  }
  const double lambda = std::sqrt(radicand);
  if (lambda < kDegenerateEigenvalue) return std::nullopt;
  return lambda;
}

double pair_eigenvalue(double ab_overlap, CopyCount k) {
  auto lambda = try_pair_eigenvalue(ab_overlap, k);
  if (!lambda) {
    throw Error(ErrorCode::kDegeneratePair,
                "pair states are indistinguishable (overlap " +
                    std::to_string(ab_overlap) + ")");
  }
  return *lambda;
}

double fid_score(const OverlapCache& cache, std::size_t test_index,
                 CopyCount k) {
  check_index(cache, test_index);
  const auto t = static_cast<Eigen::Index>(test_index);
  double sum0 = 0.0;
  for (Eigen::Index a = 0; a < cache.test_vs_class0.cols(); ++a) {
    sum0 += powered_overlap(cache.test_vs_class0(t, a), k);
  }
  double sum1 = 0.0;
  for (Eigen::Index b = 0; b < cache.test_vs_class1.cols(); ++b) {
    sum1 += powered_overlap(cache.test_vs_class1(t, b), k);
  }
  return sum0 / static_cast<double>(cache.size0()) -
         sum1 / static_cast<double>(cache.size1());
}

PairWeights pair_weights(const OverlapCache& cache, CopyCount k) {
  PairWeights w;
  w.inverse_eigenvalue.resize(cache.cross_train.rows(),
                              cache.cross_train.cols());
  for (Eigen::Index a = 0; a < cache.cross_train.rows(); ++a) {
    for (Eigen::Index b = 0; b < cache.cross_train.cols(); ++b) {
      auto lambda = try_pair_eigenvalue(cache.cross_train(a, b), k);
      if (lambda) {
        w.inverse_eigenvalue(a, b) = 1.0 / *lambda;
      } else {
        w.inverse_eigenvalue(a, b) = 0.0;
        ++w.skipped_pairs;
      }
    }
  }
  return w;
}

double hqcs_score(const OverlapCache& cache, const PairWeights& weights,
                  std::size_t test_index, CopyCount k) {
  check_index(cache, test_index);
  const auto t = static_cast<Eigen::Index>(test_index);
  const Eigen::Index m0 = cache.test_vs_class0.cols();
  const Eigen::Index m1 = cache.test_vs_class1.cols();

  // Powers of the test overlaps are shared by every pair that touches them.
  thread_local std::vector<double> pow1;
  pow1.resize(static_cast<std::size_t>(m1));
  for (Eigen::Index b = 0; b < m1; ++b) {
    pow1[b] = powered_overlap(cache.test_vs_class1(t, b), k);
  }

  double sum = 0.0;
  for (Eigen::Index a = 0; a < m0; ++a) {
    const double pow0 = powered_overlap(cache.test_vs_class0(t, a), k);
    const double* w = weights.inverse_eigenvalue.row(a).data();
    for (Eigen::Index b = 0; b < m1; ++b) {
      sum += w[b] * (pow0 - pow1[b]);
    }
  }
  return sum / (static_cast<double>(m0) * static_cast<double>(m1));
}

HqcsScore hqcs_score(const OverlapCache& cache, std::size_t test_index,
                     CopyCount k) {
  check_index(cache, test_index);
  const PairWeights w = pair_weights(cache, k);
  return {hqcs_score(cache, w, test_index, k), w.skipped_pairs};
}

std::vector<double> fidelity_kernel_weights(std::size_t size0,
                                            std::size_t size1) {
  if (size0 == 0 || size1 == 0) {
    throw Error(ErrorCode::kEmptyClass, "kernel weights need both classes");
  }
  std::vector<double> weights(size0 + size1);
  for (std::size_t i = 0; i < size0; ++i) {
    weights[i] = 1.0 / static_cast<double>(size0);
  }
  for (std::size_t i = 0; i < size1; ++i) {
    weights[size0 + i] = -1.0 / static_cast<double>(size1);
  }
  return weights;
}

double fid_score_kernel_form(const OverlapCache& cache, std::size_t test_index,
                             CopyCount k, std::span<const double> weights) {
  check_index(cache, test_index);
  if (weights.size() != cache.size0() + cache.size1()) {
    throw Error(ErrorCode::kLengthMismatch,
                "kernel weight count does not match the training set");
  }
  const auto t = static_cast<Eigen::Index>(test_index);
  const auto m0 = static_cast<Eigen::Index>(cache.size0());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m0; ++i) {
    sum += weights[i] * fidelity_kernel(cache.test_vs_class0(t, i), k);
  }
  for (Eigen::Index j = 0; j < cache.test_vs_class1.cols(); ++j) {
    sum += weights[m0 + j] * fidelity_kernel(cache.test_vs_class1(t, j), k);
  }
  return sum;
}

Label predict(double score) {
  if (!std::isfinite(score)) {
    throw Error(ErrorCode::kNonFinite, "classification score is not finite");
  }
  return score > 0.0 ? Label::kClass0 : Label::kClass1;
}

ScoreReport score_all(const OverlapCache& cache, ClassifierId classifier,
                      CopyCount k) {
  ScoreReport report;
  report.classifier = classifier;
  report.k = k.value();
  const std::size_t n = cache.test_count();
  report.scores.resize(n);
  report.predictions.resize(n);
  if (classifier == ClassifierId::kHqcs) {
    const PairWeights w = pair_weights(cache, k);
    report.skipped_pairs = w.skipped_pairs;
    for (std::size_t t = 0; t < n; ++t) {
      report.scores[t] = hqcs_score(cache, w, t, k);
    }
  } else {
    for (std::size_t t = 0; t < n; ++t) report.scores[t] = fid_score(cache, t, k);
  }
  for (std::size_t t = 0; t < n; ++t) {
    report.predictions[t] = predict(report.scores[t]);
  }
  return report;
}

}  // namespace hqcs
