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
#include <span>
#include <string>
#include <vector>

#include "hyperhoffman/family.hpp"
#include "hyperhoffman/spectral.hpp"

namespace hyperhoffman {

/// Largest n for which a function is expanded densely.
inline constexpr int kMaxFourierN = 16;

/// Coefficients of f in the orthonormal basis {v_S} of the mu_p inner
/// product, stored densely by mask.
class FourierExpansion {
 public:
  FourierExpansion(BiasVector p, std::vector<double> coeffs);

  int n() const { return p_.n(); }
  const BiasVector& bias() const { return p_; }
  std::span<const double> coefficients() const { return coeffs_; }
  double coefficient(Mask s) const { return coeffs_.at(s); }
  /// E_{mu_1}[f].
  double mean() const { return coeffs_[0]; }
  /// Sum of squared coefficients at each degree 0..n.
  std::span<const double> degree_profile() const { return profile_; }
  /// Sum of all squared coefficients, which is <f, f>.
  double total_mass() const;

  /// Values of the represented function at every x, by mask.
  std::vector<double> reconstruct() const;
  /// Masks whose coefficient exceeds `tol` in absolute value.
  std::vector<Mask> support(double tol = kTolerance) const;

 private:
  BiasVector p_;
  std::vector<double> coeffs_;
  std::vector<double> profile_;
};

FourierExpansion expand(const SubsetFamily& family, const BiasVector& p);
FourierExpansion expand_function(std::span<const double> f, const BiasVector& p);

/// Per-coordinate transforms, in place; `values` has length 2^n.
void forward_transform(std::span<double> values, const BiasVector& p);
void inverse_transform(std::span<double> values, const BiasVector& p);

/// Sum over S of lambda_S times the squared coefficient, i.e. E_{mu_2}[f, f].
double quadratic_form(const FourierExpansion& e, const SpectrumReport& spectrum);

/// Squared norm of the part above degree 1.
double high_degree_mass(const FourierExpansion& e);

/// E_{mu_2}[f, f] - E[f](1 - (1 - lambda_min)(1 - E[f])). Nonnegative for
/// boolean f.
double hoffman_deficit(const FourierExpansion& e, const SpectrumReport& spectrum);

struct SupportCheck {
  double lhs = 0.0;  ///< E_{mu_2}[f, f]
  double rhs = 0.0;  ///< f0^2 + lambda_min (f0 - f0^2)
  bool hypothesis_met = false;
  /// Coefficients above 1e-9, increasing mask order.
  std::vector<Mask> support;
  /// support is inside {empty set} plus the lambda_min eigenspace.
  bool supported = false;
};

/// If E_{mu_2}[f, f] <= f0^2 + lambda_min (f0 - f0^2), the expansion can
/// only live on the constant and the lambda_min eigenvectors.
SupportCheck low_degree_support_check(const FourierExpansion& e, const SpectrumReport& spectrum);

struct StarVerdict {
  bool detected = false;
  int center = -1;               ///< 0-based, when detected
  std::vector<int> candidates;   ///< {i : p_i = max p}, 0-based
  std::string failure;           ///< first failing precondition
};

/// Recognizes the expansion p_1 1 + sum_{k in L} a_k v_{k} of a star.
/// Checks, in order: the function is boolean; f(empty) = 0 and f([n]) = 1;
/// the constant term is max p and every other coefficient sits on a
/// singleton in L; exactly one of them equals -sqrt(p_1 q_1).
StarVerdict star_detector(const FourierExpansion& e);

enum class OneCoordinateClass { Star, ComplementOfStar, Constant };

std::string to_string(OneCoordinateClass c);

struct OneCoordinateFit {
  OneCoordinateClass kind = OneCoordinateClass::Constant;
  int center = -1;     ///< 0-based coordinate for stars and complements
  bool value = false;  ///< the constant, for Constant
  double distance2 = 0.0;

  SubsetFamily family(int n) const;
};

/// Closest one-coordinate boolean function in squared mu_p norm, among the
/// n stars, n complements of stars and the two constants. Ties go to the
/// earlier class, then the smaller center.
OneCoordinateFit nearest_one_coordinate(std::span<const double> f, const BiasVector& p);
OneCoordinateFit nearest_one_coordinate(const SubsetFamily& family, const BiasVector& p);

/// Indicator of the family as a 0/1 vector by mask.
std::vector<double> indicator(const SubsetFamily& family);

}  // namespace hyperhoffman
