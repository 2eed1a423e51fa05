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

#ifndef HQCS_CLI_CONFIG_H_
#define HQCS_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqcs/difficulty.h"

namespace hqcs::cli {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string dataset_path;
  std::string label_column;
  // Raw label value mapped to class 0. Defaults to the first value of
  // class_pair, or the first label seen in the file.
  std::optional<std::string> positive_class_value;
  // Keeps only rows with these two labels (multi-class reduction).
  std::optional<std::pair<std::string, std::string>> class_pair;
  std::vector<std::string> categorical_columns;
  std::size_t folds = 5;
  std::uint64_t seed = 42;
  double k_min = 0.25;
  double k_max = 100.0;
  double k_step = 0.25;
  std::string output_dir = ".";
  bool emit_svg = false;
  bool record_timing = false;
  std::size_t jobs = 1;
  TypingScope scope = TypingScope::kMinorityClass;

  /// Throws hqcs::Error(kInvalidArgument / kInvalidGrid) on bad settings.
  void validate() const;
};

/// Parses "v0,v1". Throws kInvalidArgument unless there are exactly two
/// distinct nonempty values.
std::pair<std::string, std::string> parse_class_pair(const std::string& text);

std::vector<std::string> split_list(const std::string& text);

}  // namespace hqcs::cli

#endif  // HQCS_CLI_CONFIG_H_
