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

#include "hqcs/cli/csv_loader.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>

namespace hqcs::cli {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(trim(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(trim(field));
  return fields;
}

std::optional<double> parse_number(const std::string& cell) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string row_context(std::size_t row, const std::string& column) {
  return "row " + std::to_string(row) + ", column '" + column + "'";
}

}  // namespace

bool is_missing_token(const std::string& cell) {
  return cell.empty() || cell == "?" || cell == "NA";
}

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_record(line);
    if (!have_header) {
      if (!fields.empty() && fields[0].starts_with("\xEF\xBB\xBF")) {
        fields[0].erase(0, 3);
      }
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    ++data_row;
    if (fields.size() != table.header.size()) {
      throw Error(ErrorCode::kParseError,
                  "row " + std::to_string(data_row) + " has " +
                      std::to_string(fields.size()) + " fields, header has " +
                      std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw Error(ErrorCode::kEmptyInput, "CSV has no header");
  return table;
}

LoadedData load_csv(const std::string& path, const RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open '" + path + "'");
  return load_csv(in, std::filesystem::path(path).stem().string(), config);
}

LoadedData load_csv(std::istream& in, const std::string& dataset_id,
                    const RunConfig& config) {
  const CsvTable table = parse_csv(in);
  const auto label_it = std::find(table.header.begin(), table.header.end(),
                                  config.label_column);
  if (label_it == table.header.end()) {
    throw Error(ErrorCode::kMissingLabelColumn,
                "no column named '" + config.label_column + "'");
  }
  const auto label_col =
      static_cast<std::size_t>(label_it - table.header.begin());

  std::vector<std::size_t> feature_cols;
  std::vector<std::string> feature_names;
  std::vector<AttributeKind> kinds;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c == label_col) continue;
    feature_cols.push_back(c);
    feature_names.push_back(table.header[c]);
    const bool categorical =
        std::find(config.categorical_columns.begin(),
                  config.categorical_columns.end(),
                  table.header[c]) != config.categorical_columns.end();
    kinds.push_back(categorical ? AttributeKind::kCategorical
                                : AttributeKind::kNumeric);
  }
  for (const auto& name : config.categorical_columns) {
    if (std::find(feature_names.begin(), feature_names.end(), name) ==
        feature_names.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "categorical column '" + name + "' is not a feature column");
    }
  }
  if (feature_cols.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no feature columns");
  }

  // Distinct labels in order of first appearance.
  std::vector<std::string> labels;
  for (const auto& row : table.rows) {
    if (std::find(labels.begin(), labels.end(), row[label_col]) ==
        labels.end()) {
      labels.push_back(row[label_col]);
    }
  }

  std::string value0, value1;
  if (config.class_pair) {
    value0 = config.class_pair->first;
    value1 = config.class_pair->second;
  } else {
    if (labels.size() > 2) {
      throw Error(ErrorCode::kMoreThanTwoClasses,
                  "label column has " + std::to_string(labels.size()) +
                      " distinct values; pass a class pair");
    }
    if (labels.size() < 2) {
      throw Error(ErrorCode::kEmptyClass,
                  "label column has fewer than two distinct values");
    }
    value0 = labels[0];
    value1 = labels[1];
  }
  if (config.positive_class_value) {
    if (*config.positive_class_value == value1) {
      std::swap(value0, value1);
    } else if (*config.positive_class_value != value0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "positive class '" + *config.positive_class_value +
                      "' does not occur in the label column");
    }
  }

  std::vector<RawSample> raw;
  std::vector<std::size_t> raw_row_ids;
  std::vector<EncodedSample> encoded0, encoded1;
  std::vector<std::size_t> ids0, ids1;
  std::size_t incomplete = 0;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t row_id = r + 1;
    const std::string& label = row[label_col];
    if (label != value0 && label != value1) continue;

    RawSample sample;
    sample.label = label == value0 ? Label::kClass0 : Label::kClass1;
    bool complete = true;
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
      const std::string& cell = row[feature_cols[f]];
      if (is_missing_token(cell)) {
        sample.features.push_back(nan);
        complete = false;
        continue;
      }
      const auto value = parse_number(cell);
      if (!value) {
        throw Error(ErrorCode::kParseError,
                    row_context(row_id, feature_names[f]) +
                        ": cannot parse '" + cell + "' as a number");
      }
      sample.features.push_back(*value);
    }
    if (complete) {
      try {
        auto enc = amplitude_encode(sample);
        if (sample.label == Label::kClass0) {
          encoded0.push_back(std::move(enc));
          ids0.push_back(row_id);
        } else {
          encoded1.push_back(std::move(enc));
          ids1.push_back(row_id);
        }
      } catch (const Error& e) {
        throw Error(e.code(), "row " + std::to_string(row_id) +
                                  ": feature vector cannot be encoded (" +
                                  e.what() + ")");
      }
    } else {
      ++incomplete;
    }
    raw.push_back(std::move(sample));
    raw_row_ids.push_back(row_id);
  }

  if (encoded0.empty() || encoded1.empty()) {
    throw Error(ErrorCode::kEmptyClass,
                "class '" + (encoded0.empty() ? value0 : value1) +
                    "' has no complete rows");
  }

  std::vector<std::size_t> row_ids = ids0;
  row_ids.insert(row_ids.end(), ids1.begin(), ids1.end());
  AttributeStats stats = compute_attribute_stats(raw, kinds);
  return LoadedData{
      dataset_id,
      std::move(feature_names),
      std::move(kinds),
      value0,
      value1,
      std::move(raw),
      std::move(raw_row_ids),
      std::move(stats),
      BinaryDataset(std::move(encoded0), std::move(encoded1)),
      std::move(row_ids),
      incomplete,
  };
}

}  // namespace hqcs::cli
