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

#ifndef HQCS_CLI_REPORTS_H_
#define HQCS_CLI_REPORTS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "hqcs/classifier.h"
#include "hqcs/difficulty.h"
#include "hqcs/eval.h"

namespace hqcs::cli {

/// Writes to a temporary sibling and renames it over `path`, so readers never
/// observe a partially written file.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Shortest representation that round-trips to the same double.
std::string format_number(double value);

struct ResultRecord {
  std::string dataset_id;
  ClassifierId classifier = ClassifierId::kHqcs;
  double k = 1.0;
  std::vector<double> fold_f1;
  double mean_f1 = 0.0;
  std::vector<std::size_t> skipped_pairs;  // per fold
  double duration_seconds = 0.0;
};

struct SampleScore {
  std::size_t row_id = 0;
  double fid_score = 0.0;
  double hqcs_score = 0.0;
  Label fid_label = Label::kClass1;
  Label hqcs_label = Label::kClass1;
};

std::string scores_csv(const std::vector<SampleScore>& scores);

/// Durations are included only when `with_timing` is set; without them the
/// document depends on nothing but the inputs.
std::string records_json(const std::vector<ResultRecord>& records,
                         bool with_timing);

std::string sweep_csv(const SweepResult& sweep);

std::string best_json(const std::string& dataset_id, const SweepResult& sweep);

/// F1 against k for both classifiers as two polylines.
std::string sweep_svg(const std::string& dataset_id, const SweepResult& sweep);

struct ProfileContext {
  std::string dataset_id;
  std::string class0_value;
  std::string class1_value;
  TypingScope scope = TypingScope::kMinorityClass;
};

std::string profile_json(const ProfileContext& context,
                         const DifficultyProfile& profile);

std::string types_csv(const std::vector<std::size_t>& row_ids,
                      const std::vector<RawSample>& samples,
                      const DifficultyProfile& profile);

}  // namespace hqcs::cli

#endif  // HQCS_CLI_REPORTS_H_
