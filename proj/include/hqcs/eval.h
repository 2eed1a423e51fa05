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

#ifndef HQCS_EVAL_H_
#define HQCS_EVAL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hqcs/classifier.h"
#include "hqcs/core.h"

namespace hqcs {

/// Stratified fold assignment over the combined sample index of a
/// BinaryDataset (class 0 first).
struct FoldPlan {
  std::size_t fold_count = 5;
  std::uint64_t seed = 42;
  std::vector<std::size_t> assignments;

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
};

/// Each class is shuffled with a seeded generator and dealt round-robin
/// across the folds, class 1 continuing where class 0 stopped.
FoldPlan stratified_kfold(const BinaryDataset& dataset, std::size_t folds,
                          std::uint64_t seed);

/// F1 for the given positive label; 0 when precision + recall = 0.
double f1_score(std::span<const Label> y_true, std::span<const Label> y_pred,
                Label positive);

/// Train/test split of one fold with its overlap cache.
struct Fold {
  OverlapCache cache;
  std::vector<std::size_t> test_indices;
  std::vector<Label> truth;
};

std::vector<Fold> prepare_folds(const BinaryDataset& dataset,
                                const FoldPlan& plan);

struct CrossValidation {
  double mean_f1 = 0.0;
  std::vector<double> fold_f1;
  std::vector<std::size_t> skipped_pairs;  // per fold, HQCS only
};

CrossValidation cross_validate(const BinaryDataset& dataset,
                               ClassifierId classifier, CopyCount k,
                               const FoldPlan& plan,
                               Label positive = Label::kClass0);

/// {k_min, k_min + step, ...} up to k_max. Points are k_min + i*step, not a
/// running sum, so long grids do not drift.
std::vector<double> make_k_grid(double k_min, double k_max, double step);

struct BestEntry {
  double k = 0.0;
  double f1 = 0.0;
};

struct SweepResult {
  std::vector<double> k_grid;
  std::vector<double> f1_hqcs;  // mean over folds, one per grid point
  std::vector<double> f1_fid;
  BestEntry best_hqcs;
  BestEntry best_fid;
  // [grid point][fold]
  std::vector<std::vector<double>> per_fold_hqcs;
  std::vector<std::vector<double>> per_fold_fid;
  std::vector<std::size_t> skipped_pairs;  // per fold at the first grid point
};

struct SweepOptions {
  Label positive = Label::kClass0;
  std::size_t jobs = 1;
};

/// Evaluates both classifiers on every grid point, reusing the fold caches.
SweepResult sweep_folds(std::span<const Fold> folds,
                        std::span<const double> k_grid,
                        const SweepOptions& options = {});

SweepResult sweep_k(const BinaryDataset& dataset, const FoldPlan& plan,
                    double k_min = 0.25, double k_max = 100.0,
                    double step = 0.25, const SweepOptions& options = {});

/// First grid index with the maximum value.
BestEntry argmax_entry(std::span<const double> k_grid,
                       std::span<const double> values);

struct NonMonotonicity {
  bool found = false;
  std::array<std::size_t, 3> witness{};  // indices i < j < l
};

/// Looks for an interior bump or dip: i < j < l with F1_j above both ends
/// (or below both) by more than 1e-9.
NonMonotonicity nonmonotonicity_check(
    std::span<const std::pair<double, double>> curve);

}  // namespace hqcs

#endif  // HQCS_EVAL_H_
