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

#ifndef HQCS_CLI_COMMANDS_H_
#define HQCS_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hqcs/cli/config.h"
#include "hqcs/cli/reports.h"
#include "hqcs/difficulty.h"
#include "hqcs/eval.h"
#include "hqcs/oracle.h"

namespace hqcs::cli {

/// Process exit statuses. Stable; documented in the README.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitVerificationFailed = 3,
  kExitInternalError = 4,
};

struct PredictOutcome {
  std::vector<ResultRecord> records;  // HQCS, then FID
  std::vector<SampleScore> scores;    // out-of-fold, ordered by row id
};

/// Cross-validated prediction at one copy count. Writes scores.csv and
/// record.json into config.output_dir.
PredictOutcome cmd_predict(const RunConfig& config, double k,
                           std::ostream& diag);

/// Full k-grid sweep. Writes sweep.csv, best.json and, when requested,
/// sweep.svg.
SweepResult cmd_sweep(const RunConfig& config, std::ostream& diag);

/// Difficulty profile. Writes profile.json and types.csv.
DifficultyProfile cmd_categorize(const RunConfig& config, std::ostream& diag);

struct VerifyConfig {
  std::size_t max_dimension = 4;
  std::size_t samples_per_class = 3;
  int k_max = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t side_cap = oracle::kDefaultSideCap;
};

struct VerifyCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  // Diagnostic checks are reported but do not affect the verdict.
  bool informational = false;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool vacuous = false;
  bool passed() const;
};

/// Randomized comparison of the linear-time classifiers against the
/// brute-force oracle, plus the eigenvalue and pair-decomposition checks.
/// Throws kSizeCap before allocating anything if max_dimension^k_max exceeds
/// the oracle cap.
VerifyReport cmd_verify(const VerifyConfig& config, std::ostream& out);

}  // namespace hqcs::cli

#endif  // HQCS_CLI_COMMANDS_H_
