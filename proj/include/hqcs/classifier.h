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

#ifndef HQCS_CLASSIFIER_H_
#define HQCS_CLASSIFIER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hqcs/core.h"

namespace hqcs {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class ClassifierId { kHqcs, kFid };

std::string_view classifier_name(ClassifierId id);

/// Precomputed overlap magnitudes between the test points and the training
/// classes, plus the cross-class training overlaps. Built once per
/// (train, test) split and reused for every copy count.
struct OverlapCache {
  Matrix test_vs_class0;  // |<c|a>|, rows: test points, cols: class 0
  Matrix test_vs_class1;  // |<c|b>|, rows: test points, cols: class 1
  Matrix cross_train;     // |<a|b>|, rows: class 0, cols: class 1

  std::size_t test_count() const {
    return static_cast<std::size_t>(test_vs_class0.rows());
  }
  std::size_t size0() const {
    return static_cast<std::size_t>(cross_train.rows());
  }
  std::size_t size1() const {
    return static_cast<std::size_t>(cross_train.cols());
  }
};

OverlapCache build_overlap_cache(std::span<const EncodedSample> test,
                                 const BinaryDataset& train);

/// o^(2k), evaluated as exp(2k ln o). Returns 0 for o = 0 and flushes
/// subnormal results to 0.
double powered_overlap(double overlap, CopyCount k);

/// Kernel K(c, x) = |<c|x>|^(2k).
inline double fidelity_kernel(double c_overlap, CopyCount k) {
  return powered_overlap(c_overlap, k);
}

/// Single-pair fidelity score |<c|a>|^(2k) - |<c|b>|^(2k).
double fid_pair_score(double oc_a, double oc_b, CopyCount k);

/// Positive eigenvalue sqrt(1 - |<a|b>|^(2k)) of the single-pair Helstrom
/// operator, or nullopt when it falls below 1e-12 (indistinguishable pair).
std::optional<double> try_pair_eigenvalue(double ab_overlap, CopyCount k);

/// Throwing variant of try_pair_eigenvalue (kDegeneratePair).
double pair_eigenvalue(double ab_overlap, CopyCount k);

/// Class-averaged power-of-overlap difference.
double fid_score(const OverlapCache& cache, std::size_t test_index,
                 CopyCount k);

struct HqcsScore {
  double score = 0.0;
  std::size_t skipped_pairs = 0;
};

/// Reciprocal pair eigenvalues 1/lambda_ab for one copy count. Degenerate
/// pairs get weight 0. Independent of the test points, so a whole batch of
/// test points can share one instance.
struct PairWeights {
  Matrix inverse_eigenvalue;  // rows: class 0, cols: class 1
  std::size_t skipped_pairs = 0;
};

PairWeights pair_weights(const OverlapCache& cache, CopyCount k);

/// Linear-time simulation of the Helstrom classifier: the class-pair average
/// of single-pair fidelity scores, each rescaled by its pair eigenvalue.
HqcsScore hqcs_score(const OverlapCache& cache, std::size_t test_index,
                     CopyCount k);

/// Same as above with weights computed once by the caller.
double hqcs_score(const OverlapCache& cache, const PairWeights& weights,
                  std::size_t test_index, CopyCount k);

/// Kernel weights in combined-index order: 1/M_a for class 0, -1/M_b for
/// class 1.
std::vector<double> fidelity_kernel_weights(std::size_t size0,
                                            std::size_t size1);

/// sum_i w_i K(c, x_i) over the training points in combined order.
double fid_score_kernel_form(const OverlapCache& cache, std::size_t test_index,
                             CopyCount k, std::span<const double> weights);

/// Class 0 if score > 0, else class 1. Throws kNonFinite for NaN/Inf.
Label predict(double score);

struct ScoreReport {
  ClassifierId classifier = ClassifierId::kHqcs;
  double k = 1.0;
  std::vector<double> scores;
  std::vector<Label> predictions;
  std::size_t skipped_pairs = 0;
};

/// Scores every test point in the cache with one classifier.
ScoreReport score_all(const OverlapCache& cache, ClassifierId classifier,
                      CopyCount k);

}  // namespace hqcs

#endif  // HQCS_CLASSIFIER_H_
