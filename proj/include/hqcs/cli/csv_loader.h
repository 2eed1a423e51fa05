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

#ifndef HQCS_CLI_CSV_LOADER_H_
#define HQCS_CLI_CSV_LOADER_H_

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "hqcs/cli/config.h"
#include "hqcs/core.h"
#include "hqcs/difficulty.h"

namespace hqcs::cli {

/// Header plus data rows of a CSV file. Quoted fields may contain commas and
/// doubled quotes.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::istream& in);

/// A labelled dataset ready for classification and profiling. Row ids are
/// 1-based data-row numbers (the header is row 0).
struct LoadedData {
  std::string dataset_id;
  std::vector<std::string> feature_names;
  std::vector<AttributeKind> kinds;
  std::string class0_value;
  std::string class1_value;

  // Every row of the two selected classes; missing cells are NaN.
  std::vector<RawSample> raw;
  std::vector<std::size_t> raw_row_ids;
  AttributeStats stats;

  // Complete rows only, amplitude-encoded. row_ids follows the combined
  // index of `dataset` (class 0 first).
  BinaryDataset dataset;
  std::vector<std::size_t> row_ids;
  std::size_t incomplete_rows = 0;
};

/// Cells that are empty, "?" or "NA" are treated as missing.
bool is_missing_token(const std::string& cell);

LoadedData load_csv(const std::string& path, const RunConfig& config);

LoadedData load_csv(std::istream& in, const std::string& dataset_id,
                    const RunConfig& config);

}  // namespace hqcs::cli

#endif  // HQCS_CLI_CSV_LOADER_H_
