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

#ifndef HQCS_ORACLE_H_
#define HQCS_ORACLE_H_

// Brute-force reference implementation of the Helstrom and fidelity
// classifiers: explicit k-fold tensor powers, centroid density matrices and a
// dense symmetric eigendecomposition. Exponential in k; intended only for
// validating the linear-time path at desk scale.

#include <cstddef>
#include <vector>

#include "hqcs/classifier.h"
#include "hqcs/core.h"

namespace hqcs::oracle {

/// Largest tensor-power dimension d^k the oracle will materialize.
inline constexpr std::size_t kDefaultSideCap = 4096;

/// How eigenvectors with |lambda| < 1e-10 enter the sign operator.
enum class ZeroEigenvalueSign {
  kPositive,  // assigned to the non-negative projector
  kZero,      // dropped (sgn(0) = 0)
};

struct Options {
  std::size_t side_cap = kDefaultSideCap;
  ZeroEigenvalueSign zero_sign = ZeroEigenvalueSign::kPositive;
};

struct DensityMatrix {
  Matrix entries;
  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

struct HelstromOperator {
  Matrix entries;                // rho - sigma
  Eigen::VectorXd eigenvalues;   // descending
  Matrix eigenvectors;           // orthonormal columns, same order
};

/// Returns d^k, throwing kSizeCap if it exceeds side_cap (checked without
/// overflow and before anything is allocated).
std::size_t tensor_side(std::size_t dimension, int k, std::size_t side_cap);

/// v^{(x)k}; entry (i1..ik) in row-major multi-index order is prod v[ij].
std::vector<double> kron_power(const EncodedSample& v, int k,
                               std::size_t side_cap = kDefaultSideCap);

/// Same, for a real-valued k. Throws kNonIntegerK unless k is integral.
std::vector<double> kron_power(const EncodedSample& v, double k,
                               std::size_t side_cap = kDefaultSideCap);

/// (1/M) sum (v^{(x)k})(v^{(x)k})^T.
DensityMatrix build_centroid(const std::vector<EncodedSample>& samples, int k,
                             std::size_t side_cap = kDefaultSideCap);

HelstromOperator helstrom_operator(const DensityMatrix& rho,
                                   const DensityMatrix& sigma);

/// <c|^{(x)k} (Pi+ - Pi-) |c>^{(x)k}.
double hqc_score_naive(const EncodedSample& c, const BinaryDataset& train,
                       int k, const Options& options = {});

/// <c|^{(x)k} (rho - sigma) |c>^{(x)k}.
double fid_score_naive(const EncodedSample& c, const BinaryDataset& train,
                       int k, const Options& options = {});

struct PairSpectrumReport {
  double analytic = 0.0;            // sqrt(1 - |<a|b>|^(2k))
  double largest = 0.0;             // most positive numeric eigenvalue
  double smallest = 0.0;            // most negative numeric eigenvalue
  std::size_t nonzero_count = 0;    // |lambda| >= 1e-10
  double max_deviation = 0.0;
  bool passed = false;
};

/// Compares the numeric spectrum of |a><a|^{(x)k} - |b><b|^{(x)k} against
/// the closed form +-sqrt(1 - |<a|b>|^(2k)).
PairSpectrumReport verify_lemma1(const EncodedSample& a, const EncodedSample& b,
                           int k, std::size_t side_cap = kDefaultSideCap);

struct IdentityReport {
  double full = 0.0;       // Helstrom score on the whole training set
  double pair_mean = 0.0;  // mean of single-pair Helstrom scores
  double deviation = 0.0;
  bool passed = false;
};

/// Checks f_hqc(c) against the class-pair mean of single-pair f_hqc values,
/// both evaluated with hqc_score_naive.
IdentityReport verify_identity(const EncodedSample& c,
                               const BinaryDataset& train, int k,
                               const Options& options = {});

}  // namespace hqcs::oracle

#endif  // HQCS_ORACLE_H_
