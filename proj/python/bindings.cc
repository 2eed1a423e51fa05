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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "hqcs/classifier.h"
#include "hqcs/core.h"
#include "hqcs/difficulty.h"
#include "hqcs/error.h"
#include "hqcs/eval.h"
#include "hqcs/oracle.h"

namespace py = pybind11;

namespace hqcs {
namespace {

// Python callers pass copy counts as plain floats.
CopyCount copies(double k) { return CopyCount(k); }

std::vector<RawSample> to_raw(const std::vector<std::vector<double>>& features,
                              const std::vector<int>& labels) {
  if (features.size() != labels.size()) {
    throw Error(ErrorCode::kLengthMismatch, "features and labels differ");
  }
  std::vector<RawSample> out;
  out.reserve(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    out.push_back({features[i], labels[i] == 0 ? Label::kClass0 : Label::kClass1});
  }
  return out;
}

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear-time Helstrom-simulation and fidelity classifiers";

  py::register_exception<Error>(m, "HqcsError", PyExc_ValueError);

  py::enum_<Label>(m, "Label")
      .value("CLASS0", Label::kClass0)
      .value("CLASS1", Label::kClass1);
  py::enum_<ClassifierId>(m, "Classifier")
      .value("HQCS", ClassifierId::kHqcs)
      .value("FID", ClassifierId::kFid);
  py::enum_<PointType>(m, "PointType")
      .value("SAFE", PointType::kSafe)
      .value("BORDERLINE", PointType::kBorderline)
      .value("RARE", PointType::kRare)
      .value("OUTLIER", PointType::kOutlier);
  py::enum_<TypingScope>(m, "TypingScope")
      .value("MINORITY_CLASS", TypingScope::kMinorityClass)
      .value("ALL_POINTS", TypingScope::kAllPoints);
  py::enum_<AttributeKind>(m, "AttributeKind")
      .value("NUMERIC", AttributeKind::kNumeric)
      .value("CATEGORICAL", AttributeKind::kCategorical);

  py::class_<EncodedSample>(m, "EncodedSample")
      .def_property_readonly("amplitudes",
                             [](const EncodedSample& s) {
                               auto a = s.amplitudes();
                               return std::vector<double>(a.begin(), a.end());
                             })
      .def_property_readonly("label", &EncodedSample::label)
      .def_property_readonly("dimension", &EncodedSample::dimension)
      .def("with_label", &EncodedSample::with_label);

  m.def(
      "amplitude_encode",
      [](std::vector<double> features, Label label) {
        return amplitude_encode(RawSample{std::move(features), label});
      },
      py::arg("features"), py::arg("label") = Label::kClass0);
  m.def("overlap", &overlap);

  py::class_<BinaryDataset>(m, "BinaryDataset")
      .def(py::init<std::vector<EncodedSample>, std::vector<EncodedSample>>(),
           py::arg("class0"), py::arg("class1"))
      .def_property_readonly("class0", &BinaryDataset::class0)
      .def_property_readonly("class1", &BinaryDataset::class1)
      .def_property_readonly("size0", &BinaryDataset::size0)
      .def_property_readonly("size1", &BinaryDataset::size1)
      .def_property_readonly("dimension", &BinaryDataset::dimension)
      .def("__len__", &BinaryDataset::size)
      .def("swapped", &BinaryDataset::swapped);

  py::class_<OverlapCache>(m, "OverlapCache")
      .def_readonly("test_vs_class0", &OverlapCache::test_vs_class0)
      .def_readonly("test_vs_class1", &OverlapCache::test_vs_class1)
      .def_readonly("cross_train", &OverlapCache::cross_train)
      .def_property_readonly("test_count", &OverlapCache::test_count);
  m.def("build_overlap_cache",
        [](const std::vector<EncodedSample>& test, const BinaryDataset& train) {
          return build_overlap_cache(test, train);
        });

  m.def("fidelity_kernel", [](double o, double k) {
    return fidelity_kernel(o, copies(k));
  });
  m.def("fid_pair_score", [](double a, double b, double k) {
    return fid_pair_score(a, b, copies(k));
  });
  m.def("pair_eigenvalue", [](double o, double k) {
    return pair_eigenvalue(o, copies(k));
  });
  m.def("fid_score", [](const OverlapCache& c, std::size_t i, double k) {
    return fid_score(c, i, copies(k));
  });
  m.def(
      "hqcs_score",
      [](const OverlapCache& c, std::size_t i, double k) {
        const auto s = hqcs_score(c, i, copies(k));
        return py::make_tuple(s.score, s.skipped_pairs);
      },
      "Returns (score, skipped_pairs).");
  m.def("predict", &predict);

  py::class_<ScoreReport>(m, "ScoreReport")
      .def_readonly("classifier", &ScoreReport::classifier)
      .def_readonly("k", &ScoreReport::k)
      .def_readonly("scores", &ScoreReport::scores)
      .def_readonly("predictions", &ScoreReport::predictions)
      .def_readonly("skipped_pairs", &ScoreReport::skipped_pairs);
  m.def("score_all", [](const OverlapCache& c, ClassifierId id, double k) {
    return score_all(c, id, copies(k));
  });

  py::class_<FoldPlan>(m, "FoldPlan")
      .def_readonly("fold_count", &FoldPlan::fold_count)
      .def_readonly("seed", &FoldPlan::seed)
      .def_readonly("assignments", &FoldPlan::assignments)
      .def("test_indices", &FoldPlan::test_indices)
      .def("train_indices", &FoldPlan::train_indices);
  m.def("stratified_kfold", &stratified_kfold, py::arg("dataset"),
        py::arg("folds") = 5, py::arg("seed") = 42);
  m.def("f1_score",
        [](const std::vector<Label>& t, const std::vector<Label>& p,
           Label positive) { return f1_score(t, p, positive); },
        py::arg("y_true"), py::arg("y_pred"),
        py::arg("positive") = Label::kClass0);

  py::class_<CrossValidation>(m, "CrossValidation")
      .def_readonly("mean_f1", &CrossValidation::mean_f1)
      .def_readonly("fold_f1", &CrossValidation::fold_f1)
      .def_readonly("skipped_pairs", &CrossValidation::skipped_pairs);
  m.def(
      "cross_validate",
      [](const BinaryDataset& d, ClassifierId id, double k, const FoldPlan& plan,
         Label positive) { return cross_validate(d, id, copies(k), plan, positive); },
      py::arg("dataset"), py::arg("classifier"), py::arg("k"), py::arg("plan"),
      py::arg("positive") = Label::kClass0);

  py::class_<BestEntry>(m, "BestEntry")
      .def_readonly("k", &BestEntry::k)
      .def_readonly("f1", &BestEntry::f1);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("k_grid", &SweepResult::k_grid)
      .def_readonly("f1_hqcs", &SweepResult::f1_hqcs)
      .def_readonly("f1_fid", &SweepResult::f1_fid)
      .def_readonly("best_hqcs", &SweepResult::best_hqcs)
      .def_readonly("best_fid", &SweepResult::best_fid)
      .def_readonly("per_fold_hqcs", &SweepResult::per_fold_hqcs)
      .def_readonly("per_fold_fid", &SweepResult::per_fold_fid);
  m.def(
      "sweep_k",
      [](const BinaryDataset& d, const FoldPlan& plan, double k_min,
         double k_max, double step, std::size_t jobs, Label positive) {
        SweepOptions options;
        options.jobs = jobs;
        options.positive = positive;
        py::gil_scoped_release release;
        return sweep_k(d, plan, k_min, k_max, step, options);
      },
      py::arg("dataset"), py::arg("plan"), py::arg("k_min") = 0.25,
      py::arg("k_max") = 100.0, py::arg("step") = 0.25, py::arg("jobs") = 1,
      py::arg("positive") = Label::kClass0);
  m.def(
      "nonmonotonicity_check",
      [](const std::vector<std::pair<double, double>>& curve) {
        const auto r = nonmonotonicity_check(curve);
        return py::make_tuple(r.found, r.witness);
      },
      "Returns (found, (i, j, l)).");

  auto oracle = m.def_submodule("oracle", "Brute-force reference classifiers");
  oracle.def("kron_power", [](const EncodedSample& v, int k) {
    return oracle::kron_power(v, k);
  });
  oracle.def(
      "hqc_score_naive",
      [](const EncodedSample& c, const BinaryDataset& train, int k,
         bool zero_sign_zero) {
        oracle::Options options;
        if (zero_sign_zero) options.zero_sign = oracle::ZeroEigenvalueSign::kZero;
        return oracle::hqc_score_naive(c, train, k, options);
      },
      py::arg("c"), py::arg("train"), py::arg("k"),
      py::arg("zero_sign_zero") = false);
  oracle.def("fid_score_naive",
             [](const EncodedSample& c, const BinaryDataset& train, int k) {
               return oracle::fid_score_naive(c, train, k);
             });
  oracle.def("verify_lemma1", [](const EncodedSample& a, const EncodedSample& b,
                                 int k) {
    const auto r = oracle::verify_lemma1(a, b, k);
    py::dict d;
    d["analytic"] = r.analytic;
    d["largest"] = r.largest;
    d["smallest"] = r.smallest;
    d["nonzero_count"] = r.nonzero_count;
    d["max_deviation"] = r.max_deviation;
    d["passed"] = r.passed;
    return d;
  });

  py::class_<DifficultyProfile>(m, "DifficultyProfile")
      .def_readonly("safe_pct", &DifficultyProfile::safe_pct)
      .def_readonly("borderline_pct", &DifficultyProfile::borderline_pct)
      .def_readonly("rare_pct", &DifficultyProfile::rare_pct)
      .def_readonly("outlier_pct", &DifficultyProfile::outlier_pct)
      .def_readonly("types", &DifficultyProfile::types)
      .def_readonly("counted", &DifficultyProfile::counted)
      .def_readonly("counted_points", &DifficultyProfile::counted_points);
  m.def(
      "categorize",
      [](const std::vector<std::vector<double>>& features,
         const std::vector<int>& labels, const std::vector<AttributeKind>& kinds,
         TypingScope scope) {
        const auto raw = to_raw(features, labels);
        const auto stats = compute_attribute_stats(raw, kinds);
        return categorize_dataset(raw, stats, scope);
      },
      py::arg("features"), py::arg("labels"),
      py::arg("kinds") = std::vector<AttributeKind>{},
      py::arg("scope") = TypingScope::kMinorityClass,
      "Types every point; NaN marks a missing value.");
}

}  // namespace
}  // namespace hqcs
