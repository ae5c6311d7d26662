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

#include <optional>
#include <string>
#include <vector>

#include "hyperhoffman/family.hpp"
#include "hyperhoffman/measure.hpp"

namespace hyperhoffman {

/// alpha <= -lambda / (1 - lambda) for a weighted graph.
double hoffman_2graph(double lambda_min);

/// alpha <= 1 - 1 / ((1 - lambda_T)(1 - lambda_link)) for a weighted 3-graph.
double hoffman_3graph(double lambda_min_t, double max_link_lambda_min);

/// alpha <= 1 - prod_s 1 / (1 - lambda_s), s = 0..r-2.
double fgl_bound(std::span<const double> lambdas);

/// Which hypothesis set guarantees mu_p(A) <= p_1.
enum class Regime {
  None,
  TwoWise,    ///< r = 2: p_3 < 1/2 and (p_1 <= 1/2 or 1 - p_2 > p_3)
  ThreeWise,  ///< r = 3: p_2 < 2/3
  RWise,      ///< r >= 4: p_2 < (r-1)/r
};

/// How the bound was obtained inside the regime.
enum class Method {
  TwoWiseHoffman,     ///< Hoffman bound on the 2-wise construction
  ThreeGraphHoffman,  ///< 3-graph bound on the 3-wise construction
  Fgl,                ///< product bound on the eps-perturbed r-wise construction
  Shifting,           ///< p_1 >= (r-1)/r > p_2: compare with p_1 replaced by p_2
};

std::string to_string(Regime r);
std::string to_string(Method m);

struct BoundReport {
  int r = 2;
  BiasVector p;  ///< sorted copy of the input
  Regime regime = Regime::None;
  std::optional<Method> method;
  /// Arity of the construction actually used; below r when an r-wise
  /// intersecting family is treated as (r-1)-wise intersecting.
  int construction_arity = 2;
  ConstructionKind construction = ConstructionKind::TwoWise;
  /// Set when the r-wise spectra come from the eps -> 0 closed forms.
  std::optional<double> epsilon;
  double lambda_0 = 0.0;
  std::vector<double> link_minima;  ///< lambda_s for s = 1..construction_arity-2
  double bound_value = 1.0;         ///< in [0, 1]
  /// Bound for p' (p_1 replaced by p_2) in the shifting case.
  std::optional<double> shifted_bound;
  /// FGL bound on the finite-eps construction, r >= 4 only.
  std::optional<double> finite_eps_bound;
  std::string violated;             ///< first failing hypothesis when regime is None
  bool conjectured_regime = false;  ///< r = 2: p_3 < 1/2; r >= 3: p_{r+1} < (r-1)/r

  explicit BoundReport(BiasVector sorted_p) : p(std::move(sorted_p)) {}
  bool claims_p1() const { return regime != Regime::None; }
};

/// Picks the regime for (p, r), builds the matching construction and
/// evaluates its bound. Outside every regime the 2-wise Hoffman bound is
/// still reported, since an r-wise intersecting family is independent in the
/// 2-wise construction.
BoundReport theorem_dispatch(const BiasVector& p, int r);

/// min over link tuples S in V^s of lambda_min(T_S) from the eps -> 0 factors.
double closed_form_link_minimum(const BiasVector& p, int r, int s);

/// mu_p(B) against (p_1/p_2) mu_{p'}(B), p' = p with p_1 replaced by p_2.
/// Coordinate 0 plays the role of p_1, coordinate 1 of p_2.
template <Scalar T>
struct ShiftComparison {
  T measure;
  T scaled_shifted;
  bool strict() const { return measure < scaled_shifted; }
};

template <Scalar T>
ShiftComparison<T> shift_comparison(const SubsetFamily& family, const BasicBiasVector<T>& p) {
  if (p.n() < 2) throw RangeError("shift_comparison: need n >= 2");
  std::vector<T> shifted(p.values().begin(), p.values().end());
  shifted[0] = shifted[1];
  const BasicBiasVector<T> p_shift(std::move(shifted));
  return {measure(p, family), T(p.p(0) / p.p(1) * measure(p_shift, family))};
}

}  // namespace hyperhoffman
