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

#include "hqcs/cli/app.h"

#include <exception>
#include <string>

#include "CLI11.hpp"
#include "hqcs/cli/commands.h"

namespace hqcs::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEigenFailure:
    case ErrorCode::kIoError:
      return kExitInternalError;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Helstrom-simulation and fidelity binary classifiers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read key=value defaults from a file");

  RunConfig config;
  std::string class_pair, positive, categorical, scope = "minority";
  app.add_option("--data", config.dataset_path, "CSV dataset path");
  app.add_option("--label-col", config.label_column, "Label column name");
  app.add_option("--class-pair", class_pair,
                 "Two label values 'v0,v1' to keep (multi-class reduction)");
  app.add_option("--positive", positive,
                 "Label value mapped to class 0 (the F1 positive class)");
  app.add_option("--categorical", categorical,
                 "Comma-separated categorical feature columns");
  app.add_option("--folds", config.folds, "Cross-validation folds")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--k-min", config.k_min, "Smallest copy count")
      ->capture_default_str();
  app.add_option("--k-max", config.k_max, "Largest copy count")
      ->capture_default_str();
  app.add_option("--k-step", config.k_step, "Copy-count grid step")
      ->capture_default_str();
  app.add_option("--out", config.output_dir, "Output directory")
      ->capture_default_str();
  app.add_flag("--svg", config.emit_svg, "Also write sweep.svg");
  app.add_flag("--timing", config.record_timing,
               "Include wall-clock durations in record.json");
  app.add_option("--jobs", config.jobs, "Worker threads")
      ->capture_default_str();
  app.add_option("--scope", scope,
                 "Points counted by categorize: minority or all")
      ->check(CLI::IsMember({"minority", "all"}))
      ->capture_default_str();

  double k = 1.0;
  auto* predict = app.add_subcommand(
      "predict", "Cross-validated scores and F1 at one copy count");
  predict->add_option("--k", k, "Copy count")->required();

  app.add_subcommand("sweep", "F1 over the copy-count grid");

  VerifyConfig verify_config;
  auto* verify = app.add_subcommand(
      "verify", "Check the fast classifiers against the brute-force oracle");
  verify->add_option("--dims", verify_config.max_dimension,
                     "Largest state dimension")
      ->capture_default_str();
  verify->add_option("--samples-per-class", verify_config.samples_per_class,
                     "Largest class size")
      ->capture_default_str();
  verify->add_option("--k-max-int", verify_config.k_max,
                     "Largest integer copy count")
      ->capture_default_str();
  verify->add_option("--trials", verify_config.trials, "Random instances")
      ->capture_default_str();

  app.add_subcommand("categorize", "Safe/borderline/rare/outlier profile");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (!class_pair.empty()) config.class_pair = parse_class_pair(class_pair);
    if (!positive.empty()) config.positive_class_value = positive;
    config.categorical_columns = split_list(categorical);
    config.scope = scope == "all" ? TypingScope::kAllPoints
                                  : TypingScope::kMinorityClass;

    if (predict->parsed()) {
      const auto outcome = cmd_predict(config, k, err);
      for (const auto& r : outcome.records) {
        out << classifier_name(r.classifier) << " k=" << format_number(r.k)
            << " mean_f1=" << format_number(r.mean_f1) << '\n';
      }
    } else if (app.got_subcommand("sweep")) {
      const auto sweep = cmd_sweep(config, err);
      out << "grid points: " << sweep.k_grid.size() << '\n'
          << "best HQCS: k=" << format_number(sweep.best_hqcs.k)
          << " f1=" << format_number(sweep.best_hqcs.f1) << '\n'
          << "best FID: k=" << format_number(sweep.best_fid.k)
          << " f1=" << format_number(sweep.best_fid.f1) << '\n';
    } else if (verify->parsed()) {
      verify_config.seed = config.seed;
      const auto report = cmd_verify(verify_config, out);
      if (!report.passed()) return kExitVerificationFailed;
    } else if (app.got_subcommand("categorize")) {
      const auto profile = cmd_categorize(config, err);
      out << "safe " << format_number(profile.safe_pct) << "%, borderline "
          << format_number(profile.borderline_pct) << "%, rare "
          << format_number(profile.rare_pct) << "%, outlier "
          << format_number(profile.outlier_pct) << "% ("
          << profile.counted_points << " points)\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace hqcs::cli
