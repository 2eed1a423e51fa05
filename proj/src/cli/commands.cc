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

#include "hqcs/cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <random>

#include "hqcs/cli/csv_loader.h"
#include "hqcs/sampling.h"

namespace hqcs::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string output_path(const RunConfig& config, const char* name) {
  return (std::filesystem::path(config.output_dir) / name).string();
}

LoadedData load(const RunConfig& config, std::ostream& diag) {
  config.validate();
  LoadedData data = load_csv(config.dataset_path, config);
  if (data.incomplete_rows > 0) {
    diag << "note: " << data.incomplete_rows
         << " row(s) with missing values excluded from classification\n";
  }
  return data;
}

void warn_skipped(const std::vector<std::size_t>& skipped, std::ostream& diag) {
  for (std::size_t f = 0; f < skipped.size(); ++f) {
    if (skipped[f] > 0) {
      diag << "warning: fold " << f + 1 << ": " << skipped[f]
           << " cross-class training pair(s) are identical states and were "
              "skipped in the HQCS sum\n";
    }
  }
}

}  // namespace

PredictOutcome cmd_predict(const RunConfig& config, double k,
                           std::ostream& diag) {
  const CopyCount copies(k);
  const LoadedData data = load(config, diag);
  const FoldPlan plan =
      stratified_kfold(data.dataset, config.folds, config.seed);

  const auto start = Clock::now();
  const auto folds = prepare_folds(data.dataset, plan);
  const double cache_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();

  PredictOutcome outcome;
  std::vector<SampleScore> scores(data.dataset.size());
  ResultRecord hq{data.dataset_id, ClassifierId::kHqcs, k, {}, 0.0, {}, 0.0};
  ResultRecord fi{data.dataset_id, ClassifierId::kFid, k, {}, 0.0, {}, 0.0};

  for (const auto& fold : folds) {
    auto t0 = Clock::now();
    const ScoreReport hq_report =
        score_all(fold.cache, ClassifierId::kHqcs, copies);
    hq.duration_seconds +=
        std::chrono::duration<double>(Clock::now() - t0).count();
    t0 = Clock::now();
    const ScoreReport fi_report =
        score_all(fold.cache, ClassifierId::kFid, copies);
    fi.duration_seconds +=
        std::chrono::duration<double>(Clock::now() - t0).count();

    hq.fold_f1.push_back(
        f1_score(fold.truth, hq_report.predictions, Label::kClass0));
    fi.fold_f1.push_back(
        f1_score(fold.truth, fi_report.predictions, Label::kClass0));
    hq.skipped_pairs.push_back(hq_report.skipped_pairs);
    fi.skipped_pairs.push_back(0);

    for (std::size_t t = 0; t < fold.test_indices.size(); ++t) {
      SampleScore& s = scores[fold.test_indices[t]];
      s.row_id = data.row_ids[fold.test_indices[t]];
      s.hqcs_score = hq_report.scores[t];
      s.fid_score = fi_report.scores[t];
      s.hqcs_label = hq_report.predictions[t];
      s.fid_label = fi_report.predictions[t];
    }
  }
  for (auto* r : {&hq, &fi}) {
    double sum = 0.0;
    for (double v : r->fold_f1) sum += v;
    r->mean_f1 = sum / static_cast<double>(r->fold_f1.size());
    r->duration_seconds += cache_seconds;
  }
  warn_skipped(hq.skipped_pairs, diag);

  std::sort(scores.begin(), scores.end(),
            [](const SampleScore& a, const SampleScore& b) {
              return a.row_id < b.row_id;
            });
  outcome.records = {hq, fi};
  outcome.scores = std::move(scores);

  write_file_atomic(output_path(config, "scores.csv"),
                    scores_csv(outcome.scores));
  write_file_atomic(output_path(config, "record.json"),
                    records_json(outcome.records, config.record_timing));
  return outcome;
}

SweepResult cmd_sweep(const RunConfig& config, std::ostream& diag) {
  const LoadedData data = load(config, diag);
  const FoldPlan plan =
      stratified_kfold(data.dataset, config.folds, config.seed);
  SweepOptions options;
  options.jobs = config.jobs;
  SweepResult sweep = sweep_k(data.dataset, plan, config.k_min, config.k_max,
                              config.k_step, options);
  warn_skipped(sweep.skipped_pairs, diag);

  write_file_atomic(output_path(config, "sweep.csv"), sweep_csv(sweep));
  write_file_atomic(output_path(config, "best.json"),
                    best_json(data.dataset_id, sweep));
  if (config.emit_svg) {
    write_file_atomic(output_path(config, "sweep.svg"),
                      sweep_svg(data.dataset_id, sweep));
  }
  return sweep;
}

DifficultyProfile cmd_categorize(const RunConfig& config, std::ostream& diag) {
  const LoadedData data = load(config, diag);
  DifficultyProfile profile =
      categorize_dataset(data.raw, data.stats, config.scope);
  ProfileContext context{data.dataset_id, data.class0_value,
                         data.class1_value, config.scope};
  write_file_atomic(output_path(config, "profile.json"),
                    profile_json(context, profile));
  write_file_atomic(output_path(config, "types.csv"),
                    types_csv(data.raw_row_ids, data.raw, profile));
  return profile;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) {
    return c.informational || c.passed();
  });
}

VerifyReport cmd_verify(const VerifyConfig& config, std::ostream& out) {
  if (config.max_dimension < 1 || config.samples_per_class < 1 ||
      config.k_max < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "verify needs dimension, samples per class and k_max >= 1");
  }
  oracle::tensor_side(config.max_dimension, config.k_max, config.side_cap);

  VerifyCheck spectrum{"pair_operator_eigenvalues", 0, 0, 0.0, 1e-10, false};
  VerifyCheck identity{"pair_decomposition_identity", 0, 0, 0.0, 1e-9, false};
  VerifyCheck hqcs{"hqcs_vs_naive", 0, 0, 0.0, 1e-9, false};
  VerifyCheck fid{"fid_vs_naive", 0, 0, 0.0, 1e-10, false};
  VerifyCheck single_pair{"single_pair_hqcs_vs_naive_sgn0", 0, 0, 0.0, 1e-9,
                          true};

  auto record = [](VerifyCheck& check, double deviation, bool ok) {
    ++check.instances;
    check.max_deviation = std::max(check.max_deviation, deviation);
    if (!ok) ++check.failures;
  };

  std::mt19937_64 rng(config.seed);
  const int min_dim = config.max_dimension >= 2 ? 2 : 1;
  oracle::Options options;
  options.side_cap = config.side_cap;
  oracle::Options sgn0 = options;
  sgn0.zero_sign = oracle::ZeroEigenvalueSign::kZero;

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const auto dim = static_cast<std::size_t>(
        uniform_int(rng, min_dim, static_cast<int>(config.max_dimension)));
    const int k = uniform_int(rng, 1, config.k_max);
    const int m0 =
        uniform_int(rng, 1, static_cast<int>(config.samples_per_class));
    const int m1 =
        uniform_int(rng, 1, static_cast<int>(config.samples_per_class));
    std::vector<EncodedSample> c0, c1;
    for (int i = 0; i < m0; ++i) c0.push_back(random_unit_sample(rng, dim));
    for (int i = 0; i < m1; ++i) {
      c1.push_back(random_unit_sample(rng, dim, Label::kClass1));
    }
    const EncodedSample c = random_unit_sample(rng, dim);
    const BinaryDataset train(c0, c1);

    if (dim >= 2) {
      const auto l = oracle::verify_lemma1(c0[0], c1[0], k, config.side_cap);
      record(spectrum, l.max_deviation, l.passed);
    }

    const auto id = oracle::verify_identity(c, train, k, options);
    record(identity, id.deviation, id.passed);

    const std::vector<EncodedSample> test{c};
    const OverlapCache cache = build_overlap_cache(test, train);
    const CopyCount copies(k);
    const double hq_dev =
        std::abs(hqcs_score(cache, 0, copies).score -
                 oracle::hqc_score_naive(c, train, k, options));
    record(hqcs, hq_dev, hq_dev <= hqcs.tolerance);
    const double fi_dev = std::abs(fid_score(cache, 0, copies) -
                                   oracle::fid_score_naive(c, train, k, options));
    record(fid, fi_dev, fi_dev <= fid.tolerance);

    const BinaryDataset pair({c0[0]}, {c1[0]});
    const OverlapCache pair_cache = build_overlap_cache(test, pair);
    const double sp_dev =
        std::abs(hqcs_score(pair_cache, 0, copies).score -
                 oracle::hqc_score_naive(c, pair, k, sgn0));
    record(single_pair, sp_dev, sp_dev <= single_pair.tolerance);
  }

  VerifyReport report;
  report.checks = {spectrum, identity, hqcs, fid, single_pair};
  report.vacuous = config.trials == 0;
  if (report.vacuous) {
    out << "warning: 0 trials requested; verification is vacuous\n";
  }
  for (const auto& check : report.checks) {
    out << (check.passed() ? "PASS " : "FAIL ") << check.name
        << (check.informational ? " (informational)" : "")
        << ": instances=" << check.instances
        << " failures=" << check.failures
        << " max_deviation=" << format_number(check.max_deviation)
        << " tolerance=" << format_number(check.tolerance) << '\n';
  }
  out << (report.passed() ? "verification passed\n" : "verification FAILED\n");
  return report;
}

}  // namespace hqcs::cli
