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

#include "hyperhoffman/family.hpp"
#include "hyperhoffman/fourier.hpp"

namespace hyperhoffman {

/// Default slack on the one-coordinate approximation constant 4.
inline constexpr double kDefaultKsSlack = 4.5;

/// (r-2)/(r-1) < p < (r-1)/r for r >= 3, 0 < p < 1/2 for r = 2.
bool in_stability_regime(int r, double p);
bool in_stability_regime(int r, const Rational& p);

/// Stability constant, in the per-arity closed forms.
template <Scalar T>
T c_p(int r, const T& p) {
  if (r < 2) throw RangeError("c_p: r must be >= 2");
  if (!in_stability_regime(r, p)) throw RangeError("c_p: p outside the stability regime for r=" + std::to_string(r));
  const T q = 1 - p;
  if (r == 2) return T(4 * q * q / (1 - 2 * p));
  if (r == 3) return T(16 * p * q * q / ((2 * p - 1) * (3 - 4 * p)));
  const T k = r - 1;
  return T(4 * k * k * p * q * q / ((k * p - (r - 2)) * ((2 * r - 3) - 2 * k * p)));
}

/// The r >= 4 closed form evaluated at any r >= 2.
template <Scalar T>
T c_p_general(int r, const T& p) {
  const T q = 1 - p;
  const T k = r - 1;
  return T(4 * k * k * p * q * q / ((k * p - (r - 2)) * ((2 * r - 3) - 2 * k * p)));
}

/// Bound on tau = ||f^{>1}||^2 / f0 for an r-wise intersecting family with
/// mu_p = p - eps, in closed form.
template <Scalar T>
T tau_bound(int r, const T& p, const T& eps) {
  if (!in_stability_regime(r, p)) throw RangeError("tau_bound: p outside the stability regime for r=" + std::to_string(r));
  const T q = 1 - p;
  if (r == 2) return T(q * q * eps / (p * (1 - 2 * p)));
  if (r == 3) return T(4 * q * q * eps / ((2 * p - 1) * (3 - 4 * p)));
  const T k = r - 1;
  return T(k * k * q * q * eps / ((k * p - (r - 2)) * ((2 * r - 3) - 2 * k * p)));
}

/// The same bound from the eigenvalues: with lambda_1 = 1 - 1/((r-1)q),
/// lambda_3 = lambda_1^3 and link bound B = (r-2)/(r-1),
/// tau <= (B - f0 - lambda_1 (1 - f0)) / (lambda_3 - lambda_1), f0 = p - eps.
double tau_bound_from_eigenvalues(int r, double p, double eps);

/// Largest eps with (sqrt(p - eps) - sqrt(q))^2 > slack * C_p * eps / 4,
/// i.e. below which a complemented star is farther than the allowed distance.
/// Returns p when the inequality holds on all of (0, p).
double g2_elimination_threshold(int r, double p, double slack = kDefaultKsSlack);

struct StabilityConfig {
  double ks_slack = kDefaultKsSlack;
  /// Smallness threshold on eps; default is half of g2_elimination_threshold.
  std::optional<double> eps_threshold;
};

enum class StabilityVerdict {
  WithinBound,         ///< tau within bound and, below threshold, nearest g is a star
  HypothesisViolated,  ///< eps at or above threshold; tau still checked
  TauExceeded,
  NotStar,             ///< eps below threshold but nearest g is not a star
};

std::string to_string(StabilityVerdict v);

struct StabilityReport {
  int n = 0;
  int r = 3;
  double p = 0.0;
  double eps = 0.0;
  double mean = 0.0;  ///< f0 = mu_p(F)
  double tau = 0.0;
  double tau_bound = 0.0;
  double delta = 0.0;  ///< p * tau_bound, the bound on ||f^{>1}||^2
  double c_p = 0.0;
  double cp_eps = 0.0;
  double high_degree_mass = 0.0;
  double nearest_star_distance = 0.0;  ///< min_i mu_p(F symmetric-difference star_i)
  int nearest_star = -1;
  OneCoordinateFit nearest;
  double eps_threshold = 0.0;
  StabilityConfig config;
  StabilityVerdict verdict = StabilityVerdict::WithinBound;
};

/// Evaluates the stability chain for an r-wise intersecting family under a
/// uniform p in the regime. Throws ValidityError for a non-intersecting
/// family and RangeError outside the regime.
StabilityReport verify_stability(const SubsetFamily& family, const BiasVector& p, int r,
                                 const StabilityConfig& config = {});

/// mu_p of {G : |G ∩ [2i+2]| >= i+2}.
template <Scalar T>
T ak_measure(const T& p, int i) {
  if (i < 0) throw RangeError("ak_measure: i must be >= 0");
  const T q = 1 - p;
  T sum = 0;
  for (int j = 0; j <= i; ++j) {
    T term = static_cast<long>(choose(2 * i + 2, j));
    for (int k = 0; k < 2 * i + 2 - j; ++k) term *= p;
    for (int k = 0; k < j; ++k) term *= q;
    sum += term;
  }
  return sum;
}

/// Smallest i with i/(2i+1) <= p <= (i+1)/(2i+3); needs 0 < p < 1/2.
int ak_band(double p);
int ak_band(const Rational& p);

enum class StabilityCase { BelowHalf, Half, AboveHalf };

std::string to_string(StabilityCase c);

struct CaseAnalysis {
  StabilityCase kind = StabilityCase::BelowHalf;
  double p = 0.0;
  std::optional<int> ak_index;  ///< below 1/2
  /// mu_p(G_i) below 1/2, the majority(3,4) measure 5/16 at 1/2, C_p above.
  double extremal_value = 0.0;
  double eps_p = 0.0;
};

/// Governing case of the 3-wise stability statement for 0 < p < 2/3.
CaseAnalysis stability_case_analysis(double p, double ks_slack = kDefaultKsSlack);

}  // namespace hyperhoffman
