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

#include "hqcs/cli/config.h"

#include <sstream>

#include "hqcs/eval.h"

namespace hqcs::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<std::string, std::string> parse_class_pair(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 2 || parts[0] == parts[1]) {
    throw Error(ErrorCode::kInvalidArgument,
                "class pair must be two distinct values 'v0,v1', got '" +
                    text + "'");
  }
  return {parts[0], parts[1]};
}

void RunConfig::validate() const {
  if (dataset_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no dataset path given");
  }
  if (label_column.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no label column given");
  }
  if (folds < 2) {
    throw Error(ErrorCode::kInvalidArgument, "folds must be at least 2");
  }
  if (jobs < 1) throw Error(ErrorCode::kInvalidArgument, "jobs must be >= 1");
  if (class_pair && positive_class_value &&
      *positive_class_value != class_pair->first &&
      *positive_class_value != class_pair->second) {
    throw Error(ErrorCode::kInvalidArgument,
                "positive class '" + *positive_class_value +
                    "' is not one of the class pair values");
  }
  make_k_grid(k_min, k_max, k_step);
}

}  // namespace hqcs::cli
