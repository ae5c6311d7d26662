// Copyright 2026 The hyperhoffman Authors
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


#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "hyperhoffman/family.hpp"
#include "hyperhoffman/measure.hpp"

namespace hyperhoffman {

/// Largest n for which product spectra are enumerated over every subset.
inline constexpr int kFullSpectrumN = 20;
/// Number of extreme coordinates searched when n exceeds kFullSpectrumN.
inline constexpr int kCandidateCoordinates = 12;

struct CoordinateEigs {
  double trivial = 1.0;
  double lambda = 0.0;
  /// p > (r-2)/(r-1), where lambda is negative.
  bool in_regime = true;
};

/// Eigenvalues of one coordinate's adjacency factor: 1 and -p/q for the
/// 2-wise construction, 1 and 1 - 1/((r-1)q) for the r-wise ones (r >= 3).
CoordinateEigs coordinate_eigs(double p, int r);

/// Non-trivial eigenvalue of a row-stochastic 2x2 factor (trace minus 1).
double factor_eigenvalue(const Matrix2<double>& m);

/// Spectrum of a Kronecker product of 2x2 factors with eigenvalues {1, l_j}:
/// the eigenvalue on v_S is the product of l_j over j in S.
class SpectrumReport {
 public:
  explicit SpectrumReport(std::vector<double> coordinate_lambdas);

  int n() const { return static_cast<int>(coord_.size()); }
  std::span<const double> coordinate_lambdas() const { return coord_; }
  double lambda(Mask s) const;

  double lambda_min() const { return lambda_min_; }
  /// Every S attaining lambda_min (within 1e-12), increasing mask order.
  const std::vector<Mask>& argmin_sets() const { return argmin_; }
  /// Next distinct value above lambda_min, if any.
  std::optional<double> second_min() const { return second_min_; }
  const std::vector<Mask>& second_argmin_sets() const { return second_argmin_; }
  /// True when n > kFullSpectrumN and the search ran over the extreme
  /// coordinates only (the minimum itself is certified against an exact
  /// min/max product recursion).
  bool restricted() const { return restricted_; }

 private:
  std::vector<double> coord_;
  double lambda_min_ = 1.0;
  std::vector<Mask> argmin_;
  std::optional<double> second_min_;
  std::vector<Mask> second_argmin_;
  bool restricted_ = false;
};

SpectrumReport product_spectrum(std::span<const double> coordinate_lambdas);

/// Spectrum of a Kronecker-factored operator with row-stochastic factors.
SpectrumReport operator_spectrum(const AdjacencyOperator& op);

/// min over S in V^s of lambda_min(T_S), using that each coordinate's link
/// pattern can be chosen independently.
double link_level_minimum(const ProductMeasure& m, int s);

/// Whether lambda_min of the 2-wise construction sits at {1} (and only at
/// singletons with maximal p), for sorted p.
struct TwoWiseMinimum {
  double lambda_single = 0.0;  ///< lambda_{{1}} = -p_1/q_1
  double lambda_triple = 0.0;  ///< lambda_{{1,2,3}}, 0 if n < 3
  bool single_is_minimum = false;
  bool claim_regime = false;  ///< p_3 < 1/2 and (p_1 <= 1/2 or q_2 > p_3)
  std::string violated;       ///< first failing hypothesis, empty if none
};
TwoWiseMinimum classify_two_wise_minimum(const BiasVector& sorted_p);

/// Orthonormal basis vector v_S for the mu_p inner product.
struct OnbVector {
  Mask set = 0;
  std::vector<double> c;  ///< c_i = sqrt(p_i / q_i)

  /// Product over i in S of c_i if i is not in x, -1/c_i if it is.
  double value(Mask x) const;
  std::vector<double> dense() const;
};

OnbVector onb_vector(Mask s, const BiasVector& p);

/// Columns v_S of the change-of-basis matrix; result[x][S].
std::vector<std::vector<double>> onb_matrix(const BiasVector& p);

/// Coefficients of the star at coordinate i: indicator = constant * 1 +
/// coefficient * v_{{i}}. Throws if the reconstruction is not exact.
struct StarDecomposition {
  double constant = 0.0;
  double coefficient = 0.0;
};
StarDecomposition star_decomposition(int i, const BiasVector& p);

/// <f, g> weighted by w.
double weighted_inner(std::span<const double> f, std::span<const double> g, std::span<const double> w);

/// Dense matrix of a Kronecker-factored operator (n <= 12).
Eigen::MatrixXd materialize(const AdjacencyOperator& op);

/// Smallest eigenvalue of an operator self-adjoint under the w-weighted inner
/// product, via the similarity D^{1/2} T D^{-1/2} and a symmetric solver.
/// Throws RangeError on non-positive weights or a non-self-adjoint input and
/// ConvergenceError if the solver fails.
double dense_lambda_min(const Eigen::MatrixXd& op, std::span<const double> weights);
double dense_lambda_min(const AdjacencyOperator& op, std::span<const double> weights);

}  // namespace hyperhoffman
