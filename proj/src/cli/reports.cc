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

#include "hqcs/cli/reports.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "hqcs/cli/config.h"
#include "json.hpp"

namespace hqcs::cli {

namespace {

using nlohmann::json;

const char* scope_name(TypingScope scope) {
  return scope == TypingScope::kMinorityClass ? "minority" : "all";
}

std::string fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
  return buf.data();
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) {
      throw Error(ErrorCode::kIoError,
                  "cannot create '" + target.parent_path().string() +
                      "': " + ec.message());
    }
  }
  const fs::path tmp =
      target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) {
      throw Error(ErrorCode::kIoError, "cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::kIoError,
                "cannot rename onto '" + path + "': " + ec.message());
  }
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value);
  return std::string(buf.data(), ptr);
}

std::string scores_csv(const std::vector<SampleScore>& scores) {
  std::ostringstream out;
  out << "row_id,fid_score,hqcs_score,fid_label,hqcs_label\n";
  for (const auto& s : scores) {
    out << s.row_id << ',' << format_number(s.fid_score) << ','
        << format_number(s.hqcs_score) << ',' << to_int(s.fid_label) << ','
        << to_int(s.hqcs_label) << '\n';
  }
  return out.str();
}

std::string records_json(const std::vector<ResultRecord>& records,
                         bool with_timing) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["records"] = json::array();
  for (const auto& r : records) {
    json item;
    item["dataset"] = r.dataset_id;
    item["classifier"] = std::string(classifier_name(r.classifier));
    item["k"] = r.k;
    item["fold_f1"] = r.fold_f1;
    item["mean_f1"] = r.mean_f1;
    item["skipped_pairs"] = r.skipped_pairs;
    if (with_timing) item["duration_seconds"] = r.duration_seconds;
    doc["records"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string sweep_csv(const SweepResult& sweep) {
  const std::size_t folds =
      sweep.per_fold_hqcs.empty() ? 0 : sweep.per_fold_hqcs.front().size();
  std::ostringstream out;
  out << "k,f1_hqcs_mean,f1_fid_mean";
  for (std::size_t f = 1; f <= folds; ++f) out << ",f1_hqcs_fold" << f;
  for (std::size_t f = 1; f <= folds; ++f) out << ",f1_fid_fold" << f;
  out << '\n';
  for (std::size_t g = 0; g < sweep.k_grid.size(); ++g) {
    out << format_number(sweep.k_grid[g]) << ','
        << format_number(sweep.f1_hqcs[g]) << ','
        << format_number(sweep.f1_fid[g]);
    for (double v : sweep.per_fold_hqcs[g]) out << ',' << format_number(v);
    for (double v : sweep.per_fold_fid[g]) out << ',' << format_number(v);
    out << '\n';
  }
  return out.str();
}

std::string best_json(const std::string& dataset_id, const SweepResult& sweep) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dataset"] = dataset_id;
  doc["grid_points"] = sweep.k_grid.size();
  doc["best_hqcs"] = {{"k", sweep.best_hqcs.k}, {"f1", sweep.best_hqcs.f1}};
  doc["best_fid"] = {{"k", sweep.best_fid.k}, {"f1", sweep.best_fid.f1}};
  doc["skipped_pairs"] = sweep.skipped_pairs;
  return doc.dump(2) + "\n";
}

std::string sweep_svg(const std::string& dataset_id, const SweepResult& sweep) {
  constexpr double kWidth = 640, kHeight = 400;
  constexpr double kLeft = 60, kRight = 20, kTop = 30, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double k_lo = sweep.k_grid.front();
  const double k_hi = sweep.k_grid.back();
  const double k_span = k_hi > k_lo ? k_hi - k_lo : 1.0;

  auto x_of = [&](double k) { return kLeft + (k - k_lo) / k_span * plot_w; };
  auto y_of = [&](double f1) { return kTop + (1.0 - f1) * plot_h; };
  auto polyline = [&](const std::vector<double>& values,
                      const char* colour) {
    std::string pts;
    for (std::size_t g = 0; g < values.size(); ++g) {
      if (g) pts += ' ';
      pts += fixed(x_of(sweep.k_grid[g]), 2) + ',' + fixed(y_of(values[g]), 2);
    }
    return std::string("  <polyline fill=\"none\" stroke=\"") + colour +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "  <title>F1 vs k: " << dataset_id << "</title>\n";
  // Axes.
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h
      << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << kLeft - 8 << "\" y=\"" << kTop + plot_h
      << "\" text-anchor=\"end\" font-size=\"11\">0</text>\n";
  out << "  <text x=\"" << kLeft - 8 << "\" y=\"" << kTop + 4
      << "\" text-anchor=\"end\" font-size=\"11\">1</text>\n";
  out << "  <text x=\"" << kLeft << "\" y=\"" << kTop + plot_h + 16
      << "\" text-anchor=\"middle\" font-size=\"11\">" << format_number(k_lo)
      << "</text>\n";
  out << "  <text x=\"" << kLeft + plot_w << "\" y=\"" << kTop + plot_h + 16
      << "\" text-anchor=\"middle\" font-size=\"11\">" << format_number(k_hi)
      << "</text>\n";
  out << "  <text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">k</text>\n";
  out << "  <text x=\"16\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << kTop + plot_h / 2 << ")\">F1</text>\n";
  out << polyline(sweep.f1_hqcs, "blue");
  out << polyline(sweep.f1_fid, "red");
  out << "  <text x=\"" << kLeft + plot_w - 4 << "\" y=\"" << kTop + 14
      << "\" text-anchor=\"end\" font-size=\"11\" fill=\"blue\">HQCS</text>\n";
  out << "  <text x=\"" << kLeft + plot_w - 4 << "\" y=\"" << kTop + 28
      << "\" text-anchor=\"end\" font-size=\"11\" fill=\"red\">FID</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string profile_json(const ProfileContext& context,
                         const DifficultyProfile& profile) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dataset"] = context.dataset_id;
  doc["class0"] = context.class0_value;
  doc["class1"] = context.class1_value;
  doc["scope"] = scope_name(context.scope);
  doc["neighbours"] = kDifficultyNeighbours;
  doc["counted_points"] = profile.counted_points;
  doc["safe_pct"] = profile.safe_pct;
  doc["borderline_pct"] = profile.borderline_pct;
  doc["rare_pct"] = profile.rare_pct;
  doc["outlier_pct"] = profile.outlier_pct;
  return doc.dump(2) + "\n";
}

std::string types_csv(const std::vector<std::size_t>& row_ids,
                      const std::vector<RawSample>& samples,
                      const DifficultyProfile& profile) {
  std::ostringstream out;
  out << "row_id,label,type,counted\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out << row_ids[i] << ',' << to_int(samples[i].label) << ','
        << point_type_name(profile.types[i]) << ','
        << (profile.counted[i] ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace hqcs::cli
