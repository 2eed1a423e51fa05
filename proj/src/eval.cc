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

#include "hqcs/eval.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

namespace hqcs {

namespace {

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementation so plans are portable.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

void shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[bounded(rng, i)]);
  }
}

std::vector<double> fold_column_mean(
    const std::vector<std::vector<double>>& per_fold) {
  std::vector<double> mean(per_fold.size());
  for (std::size_t g = 0; g < per_fold.size(); ++g) {
    double sum = 0.0;
    for (double v : per_fold[g]) sum += v;
    mean[g] = sum / static_cast<double>(per_fold[g].size());
  }
  return mean;
}

}  // namespace

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan stratified_kfold(const BinaryDataset& dataset, std::size_t folds,
                          std::uint64_t seed) {
  if (folds < 2) {
    throw Error(ErrorCode::kTooFewSamples,
                "cross-validation needs at least 2 folds");
  }
  if (dataset.size0() < folds || dataset.size1() < folds) {
    throw Error(ErrorCode::kTooFewSamples,
                "each class needs at least " + std::to_string(folds) +
                    " samples (class 0: " + std::to_string(dataset.size0()) +
                    ", class 1: " + std::to_string(dataset.size1()) + ")");
  }
  FoldPlan plan;
  plan.fold_count = folds;
  plan.seed = seed;
  plan.assignments.resize(dataset.size());

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order0(dataset.size0());
  std::vector<std::size_t> order1(dataset.size1());
  for (std::size_t i = 0; i < order0.size(); ++i) order0[i] = i;
  for (std::size_t i = 0; i < order1.size(); ++i) {
    order1[i] = dataset.size0() + i;
  }
  shuffle(order0, rng);
  shuffle(order1, rng);

  std::size_t slot = 0;
  for (std::size_t idx : order0) plan.assignments[idx] = slot++ % folds;
  for (std::size_t idx : order1) plan.assignments[idx] = slot++ % folds;
  return plan;
}

double f1_score(std::span<const Label> y_true, std::span<const Label> y_pred,
                Label positive) {
  if (y_true.size() != y_pred.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "label vectors differ in length (" +
                    std::to_string(y_true.size()) + " vs " +
                    std::to_string(y_pred.size()) + ")");
  }
  if (y_true.empty()) throw Error(ErrorCode::kEmptyInput, "no labels");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool truth = y_true[i] == positive;
    const bool pred = y_pred[i] == positive;
    if (truth && pred) ++tp;
    else if (!truth && pred) ++fp;
    else if (truth && !pred) ++fn;
  }
  // 2PR/(P+R) reduces to 2TP/(2TP+FP+FN); zero when TP = 0.
  if (tp == 0) return 0.0;
  return 2.0 * static_cast<double>(tp) /
         static_cast<double>(2 * tp + fp + fn);
}

std::vector<Fold> prepare_folds(const BinaryDataset& dataset,
                                const FoldPlan& plan) {
  if (plan.assignments.size() != dataset.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "fold plan was built for a different dataset");
  }
  std::vector<Fold> folds;
  folds.reserve(plan.fold_count);
  for (std::size_t f = 0; f < plan.fold_count; ++f) {
    Fold fold;
    fold.test_indices = plan.test_indices(f);
    std::vector<EncodedSample> test, train;
    for (std::size_t i : fold.test_indices) {
      test.push_back(dataset.at(i));
      fold.truth.push_back(dataset.at(i).label());
    }
    for (std::size_t i : plan.train_indices(f)) train.push_back(dataset.at(i));
    fold.cache =
        build_overlap_cache(test, BinaryDataset::from_samples(train));
    folds.push_back(std::move(fold));
  }
  return folds;
}

CrossValidation cross_validate(const BinaryDataset& dataset,
                               ClassifierId classifier, CopyCount k,
                               const FoldPlan& plan, Label positive) {
  const auto folds = prepare_folds(dataset, plan);
  CrossValidation cv;
  double sum = 0.0;
  for (const auto& fold : folds) {
    const ScoreReport report = score_all(fold.cache, classifier, k);
    const double f1 = f1_score(fold.truth, report.predictions, positive);
    cv.fold_f1.push_back(f1);
    cv.skipped_pairs.push_back(report.skipped_pairs);
    sum += f1;
  }
  cv.mean_f1 = sum / static_cast<double>(folds.size());
  return cv;
}

std::vector<double> make_k_grid(double k_min, double k_max, double step) {
  if (!std::isfinite(k_min) || !std::isfinite(k_max) ||
      !std::isfinite(step) || k_min <= 0.0 || k_max < k_min || step <= 0.0) {
    throw Error(ErrorCode::kInvalidGrid,
                "need 0 < k_min <= k_max and step > 0 (got k_min=" +
                    std::to_string(k_min) + ", k_max=" +
                    std::to_string(k_max) + ", step=" +
                    std::to_string(step) + ")");
  }
  const double span = (k_max - k_min) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = k_min + static_cast<double>(i) * step;
  }
  return grid;
}

BestEntry argmax_entry(std::span<const double> k_grid,
                       std::span<const double> values) {
  if (k_grid.empty() || k_grid.size() != values.size()) {
    throw Error(ErrorCode::kLengthMismatch, "grid and values differ");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return {k_grid[best], values[best]};
}

SweepResult sweep_folds(std::span<const Fold> folds,
                        std::span<const double> k_grid,
                        const SweepOptions& options) {
  if (k_grid.empty()) throw Error(ErrorCode::kInvalidGrid, "empty grid");
  if (folds.empty()) throw Error(ErrorCode::kEmptyInput, "no folds");
  for (std::size_t i = 1; i < k_grid.size(); ++i) {
    if (!(k_grid[i] > k_grid[i - 1])) {
      throw Error(ErrorCode::kInvalidGrid, "grid is not strictly ascending");
    }
  }
  const std::size_t n_grid = k_grid.size();
  const std::size_t n_folds = folds.size();

  SweepResult result;
  result.k_grid.assign(k_grid.begin(), k_grid.end());
  result.per_fold_hqcs.assign(n_grid, std::vector<double>(n_folds));
  result.per_fold_fid.assign(n_grid, std::vector<double>(n_folds));
  result.skipped_pairs.assign(n_folds, 0);

  // Work items are (grid point, fold); each writes only its own slot, so the
  // result is independent of the worker count.
  const std::size_t n_items = n_grid * n_folds;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t item = next.fetch_add(1); item < n_items;
         item = next.fetch_add(1)) {
      const std::size_t g = item / n_folds;
      const std::size_t f = item % n_folds;
      const CopyCount k(k_grid[g]);
      const Fold& fold = folds[f];
      const ScoreReport hq = score_all(fold.cache, ClassifierId::kHqcs, k);
      const ScoreReport fi = score_all(fold.cache, ClassifierId::kFid, k);
      result.per_fold_hqcs[g][f] =
          f1_score(fold.truth, hq.predictions, options.positive);
      result.per_fold_fid[g][f] =
          f1_score(fold.truth, fi.predictions, options.positive);
      if (g == 0) result.skipped_pairs[f] = hq.skipped_pairs;
    }
  };
  const std::size_t jobs =
      std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, n_items));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  result.f1_hqcs = fold_column_mean(result.per_fold_hqcs);
  result.f1_fid = fold_column_mean(result.per_fold_fid);
  result.best_hqcs = argmax_entry(result.k_grid, result.f1_hqcs);
  result.best_fid = argmax_entry(result.k_grid, result.f1_fid);
  return result;
}

SweepResult sweep_k(const BinaryDataset& dataset, const FoldPlan& plan,
                    double k_min, double k_max, double step,
                    const SweepOptions& options) {
  const auto grid = make_k_grid(k_min, k_max, step);
  const auto folds = prepare_folds(dataset, plan);
  return sweep_folds(folds, grid, options);
}

NonMonotonicity nonmonotonicity_check(
    std::span<const std::pair<double, double>> curve) {
  constexpr double kTolerance = 1e-9;
  const std::size_t n = curve.size();
  if (n < 3) {
    throw Error(ErrorCode::kTooFewPoints,
                "non-monotonicity needs at least 3 points");
  }
  // Running minima/maxima from both ends, tracking the first index attaining
  // each so the witness is deterministic.
  std::vector<std::size_t> pre_min(n), pre_max(n), suf_min(n), suf_max(n);
  pre_min[0] = pre_max[0] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    pre_min[i] = curve[i].second < curve[pre_min[i - 1]].second
                     ? i
                     : pre_min[i - 1];
    pre_max[i] = curve[i].second > curve[pre_max[i - 1]].second
                     ? i
                     : pre_max[i - 1];
  }
  suf_min[n - 1] = suf_max[n - 1] = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    suf_min[i] = curve[i].second <= curve[suf_min[i + 1]].second
                     ? i
                     : suf_min[i + 1];
    suf_max[i] = curve[i].second >= curve[suf_max[i + 1]].second
                     ? i
                     : suf_max[i + 1];
  }
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double v = curve[j].second;
    const std::size_t lo_left = pre_min[j - 1], lo_right = suf_min[j + 1];
    if (v > curve[lo_left].second + kTolerance &&
        v > curve[lo_right].second + kTolerance) {
      return {true, {lo_left, j, lo_right}};
    }
    const std::size_t hi_left = pre_max[j - 1], hi_right = suf_max[j + 1];
    if (v < curve[hi_left].second - kTolerance &&
        v < curve[hi_right].second - kTolerance) {
      return {true, {hi_left, j, hi_right}};
    }
  }
  return {};
}

}  // namespace hqcs
