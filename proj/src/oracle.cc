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

#include "hqcs/oracle.h"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

namespace hqcs::oracle {

namespace {

constexpr double kZeroEigenvalue = 1e-10;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kSpectrumTolerance = 1e-10;
constexpr double kIdentityTolerance = 1e-9;

Eigen::Map<const Eigen::VectorXd> as_vector(const std::vector<double>& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

double quadratic_form(const Matrix& m, const std::vector<double>& v) {
  const auto x = as_vector(v);
  return x.dot(m * x);
}

}  // namespace

std::size_t tensor_side(std::size_t dimension, int k, std::size_t side_cap) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "tensor power needs k >= 1, got " + std::to_string(k));
  }
  std::size_t side = 1;
  for (int i = 0; i < k; ++i) {
    if (dimension != 0 && side > side_cap / dimension) {
      throw Error(ErrorCode::kSizeCap,
                  "dimension " + std::to_string(dimension) + "^" +
                      std::to_string(k) + " exceeds the oracle cap of " +
                      std::to_string(side_cap));
    }
    side *= dimension;
  }
  if (side > side_cap) {
    throw Error(ErrorCode::kSizeCap, "tensor power exceeds the oracle cap");
  }
  return side;
}

std::vector<double> kron_power(const EncodedSample& v, int k,
                               std::size_t side_cap) {
  const std::size_t side = tensor_side(v.dimension(), k, side_cap);
  std::vector<double> out{1.0};
  out.reserve(side);
  auto amp = v.amplitudes();
  for (int copy = 0; copy < k; ++copy) {
    std::vector<double> next;
    next.reserve(out.size() * amp.size());
    for (double x : out) {
      for (double y : amp) next.push_back(x * y);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<double> kron_power(const EncodedSample& v, double k,
                               std::size_t side_cap) {
  if (!std::isfinite(k) || k != std::floor(k) ||
      k > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::kNonIntegerK,
                "tensor powers need an integral copy count, got " +
                    std::to_string(k));
  }
  return kron_power(v, static_cast<int>(k), side_cap);
}

DensityMatrix build_centroid(const std::vector<EncodedSample>& samples, int k,
                             std::size_t side_cap) {
  if (samples.empty()) {
    throw Error(ErrorCode::kEmptyClass, "centroid of an empty class");
  }
  const std::size_t side =
      tensor_side(samples.front().dimension(), k, side_cap);
  const auto n = static_cast<Eigen::Index>(side);
  DensityMatrix rho{Matrix::Zero(n, n)};
  for (const auto& s : samples) {
    if (s.dimension() != samples.front().dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "centroid samples differ in dimension");
    }
    const auto psi = kron_power(s, k, side_cap);
    const auto x = as_vector(psi);
    rho.entries.noalias() += x * x.transpose();
  }
  rho.entries /= static_cast<double>(samples.size());
  return rho;
}

HelstromOperator helstrom_operator(const DensityMatrix& rho,
                                   const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "centroids have different dimensions");
  }
  HelstromOperator op;
  op.entries = rho.entries - sigma.entries;
  const double asymmetry =
      (op.entries - op.entries.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > kSymmetryTolerance) {
    throw Error(ErrorCode::kEigenFailure,
                "Helstrom operator is not symmetric (max |m - m^T| = " +
                    std::to_string(asymmetry) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op.entries);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kEigenFailure, "eigensolver did not converge");
  }
  // Eigen returns ascending order.
  op.eigenvalues = solver.eigenvalues().reverse();
  op.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return op;
}

double hqc_score_naive(const EncodedSample& c, const BinaryDataset& train,
                       int k, const Options& options) {
  const auto rho = build_centroid(train.class0(), k, options.side_cap);
  const auto sigma = build_centroid(train.class1(), k, options.side_cap);
  const auto op = helstrom_operator(rho, sigma);
  const auto psi = kron_power(c, k, options.side_cap);
  const Eigen::VectorXd projections = op.eigenvectors.transpose() *
                                      as_vector(psi);
  double score = 0.0;
  for (Eigen::Index j = 0; j < op.eigenvalues.size(); ++j) {
    const double lambda = op.eigenvalues(j);
    double sign;
    if (std::abs(lambda) < kZeroEigenvalue) {
      sign = options.zero_sign == ZeroEigenvalueSign::kPositive ? 1.0 : 0.0;
    } else {
      sign = lambda > 0.0 ? 1.0 : -1.0;
    }
    score += sign * projections(j) * projections(j);
  }
  return score;
}

double fid_score_naive(const EncodedSample& c, const BinaryDataset& train,
                       int k, const Options& options) {
  const auto rho = build_centroid(train.class0(), k, options.side_cap);
  const auto sigma = build_centroid(train.class1(), k, options.side_cap);
  return quadratic_form(rho.entries - sigma.entries,
                        kron_power(c, k, options.side_cap));
}

PairSpectrumReport verify_lemma1(const EncodedSample& a, const EncodedSample& b,
                           int k, std::size_t side_cap) {
  const double ab = overlap(a, b);
  if (ab >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair spectrum check needs states that differ beyond sign");
  }
  const auto rho = build_centroid({a}, k, side_cap);
  const auto sigma = build_centroid({b}, k, side_cap);
  const auto op = helstrom_operator(rho, sigma);

  PairSpectrumReport report;
  report.analytic = pair_eigenvalue(ab, CopyCount(k));
  report.largest = op.eigenvalues(0);
  report.smallest = op.eigenvalues(op.eigenvalues.size() - 1);
  for (Eigen::Index j = 0; j < op.eigenvalues.size(); ++j) {
    if (std::abs(op.eigenvalues(j)) >= kZeroEigenvalue) ++report.nonzero_count;
  }
  report.max_deviation =
      std::max(std::abs(report.largest - report.analytic),
               std::abs(report.smallest + report.analytic));
  report.passed =
      report.nonzero_count == 2 && report.max_deviation <= kSpectrumTolerance;
  return report;
}

IdentityReport verify_identity(const EncodedSample& c,
                               const BinaryDataset& train, int k,
                               const Options& options) {
  IdentityReport report;
  report.full = hqc_score_naive(c, train, k, options);
  double sum = 0.0;
  for (const auto& a : train.class0()) {
    for (const auto& b : train.class1()) {
      sum += hqc_score_naive(c, BinaryDataset({a}, {b}), k, options);
    }
  }
  report.pair_mean = sum / (static_cast<double>(train.size0()) *
                            static_cast<double>(train.size1()));
  report.deviation = std::abs(report.full - report.pair_mean);
  report.passed = report.deviation <= kIdentityTolerance;
  return report;
}

}  // namespace hqcs::oracle
