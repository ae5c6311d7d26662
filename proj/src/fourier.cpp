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


#include "hyperhoffman/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace hyperhoffman {

namespace {

constexpr double kCoefficientTol = 1e-9;

void check_fourier_n(int n) {
  if (n > kMaxFourierN) throw CapError("fourier: n must be <= " + std::to_string(kMaxFourierN));
}

}  // namespace

FourierExpansion::FourierExpansion(BiasVector p, std::vector<double> coeffs)
    : p_(std::move(p)), coeffs_(std::move(coeffs)), profile_(static_cast<std::size_t>(p_.n()) + 1, 0.0) {
  check_fourier_n(p_.n());
  if (coeffs_.size() != (std::size_t{1} << p_.n())) {
    throw DimensionError("FourierExpansion: need 2^n coefficients");
  }
  for (Mask s = 0; s < coeffs_.size(); ++s) profile_[static_cast<std::size_t>(popcount(s))] += coeffs_[s] * coeffs_[s];
}

double FourierExpansion::total_mass() const { return std::accumulate(profile_.begin(), profile_.end(), 0.0); }

std::vector<double> FourierExpansion::reconstruct() const {
  std::vector<double> v = coeffs_;
  inverse_transform(v, p_);
  return v;
}

std::vector<Mask> FourierExpansion::support(double tol) const {
  std::vector<Mask> out;
  for (Mask s = 0; s < coeffs_.size(); ++s) {
    if (std::abs(coeffs_[s]) > tol) out.push_back(s);
  }
  return out;
}

void forward_transform(std::span<double> values, const BiasVector& p) {
  if (values.size() != (std::size_t{1} << p.n())) throw DimensionError("forward_transform: need 2^n values");
  for (int i = 0; i < p.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const double pi = p.p(i), qi = p.q(i), s = std::sqrt(pi * qi);
    for (Mask x = 0; x < values.size(); ++x) {
      if (x & bit) continue;
      const double f0 = values[x], f1 = values[x | bit];
      values[x] = qi * f0 + pi * f1;
      values[x | bit] = s * (f0 - f1);
    }
  }
}

void inverse_transform(std::span<double> values, const BiasVector& p) {
  if (values.size() != (std::size_t{1} << p.n())) throw DimensionError("inverse_transform: need 2^n values");
  for (int i = 0; i < p.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const double c = std::sqrt(p.p(i) / p.q(i));
    for (Mask x = 0; x < values.size(); ++x) {
      if (x & bit) continue;
      const double a0 = values[x], a1 = values[x | bit];
      values[x] = a0 + c * a1;
      values[x | bit] = a0 - a1 / c;
    }
  }
}

std::vector<double> indicator(const SubsetFamily& family) {
  std::vector<double> f(family.universe_size(), 0.0);
  for (Mask a : family.members()) f[a] = 1.0;
  return f;
}

FourierExpansion expand_function(std::span<const double> f, const BiasVector& p) {
  check_fourier_n(p.n());
  std::vector<double> v(f.begin(), f.end());
  forward_transform(v, p);
  return FourierExpansion(p, std::move(v));
}

FourierExpansion expand(const SubsetFamily& family, const BiasVector& p) {
  if (family.n() != p.n()) {
    throw DimensionError("expand: family has n=" + std::to_string(family.n()) + " but p has n=" + std::to_string(p.n()));
  }
  check_fourier_n(p.n());
  return expand_function(indicator(family), p);
}

double quadratic_form(const FourierExpansion& e, const SpectrumReport& spectrum) {
  if (spectrum.n() != e.n()) throw DimensionError("quadratic_form: spectrum and expansion disagree in n");
  double sum = 0.0;
  const auto c = e.coefficients();
  for (Mask s = 0; s < c.size(); ++s) {
    if (c[s] != 0.0) sum += spectrum.lambda(s) * c[s] * c[s];
  }
  return sum;
}

double high_degree_mass(const FourierExpansion& e) {
  const auto prof = e.degree_profile();
  double sum = 0.0;
  for (std::size_t d = 2; d < prof.size(); ++d) sum += prof[d];
  return sum;
}

double hoffman_deficit(const FourierExpansion& e, const SpectrumReport& spectrum) {
  const double m = e.mean();
  return quadratic_form(e, spectrum) - m * (1.0 - (1.0 - spectrum.lambda_min()) * (1.0 - m));
}

SupportCheck low_degree_support_check(const FourierExpansion& e, const SpectrumReport& spectrum) {
  SupportCheck out;
  const double f0 = e.mean();
  out.lhs = quadratic_form(e, spectrum);
  out.rhs = f0 * f0 + spectrum.lambda_min() * (f0 - f0 * f0);
  out.hypothesis_met = out.lhs <= out.rhs + 1e-10;
  out.support = e.support(kCoefficientTol);
  const auto& argmin = spectrum.argmin_sets();
  out.supported = std::all_of(out.support.begin(), out.support.end(), [&](Mask s) {
    return s == 0 || std::binary_search(argmin.begin(), argmin.end(), s);
  });
  return out;
}

StarVerdict star_detector(const FourierExpansion& e) {
  StarVerdict v;
  const BiasVector& p = e.bias();
  const double p1 = p.max();
  for (int i = 0; i < p.n(); ++i) {
    if (p.p(i) == p1) v.candidates.push_back(i);
  }

  const auto f = e.reconstruct();
  for (Mask x = 0; x < f.size(); ++x) {
    if (std::abs(f[x]) > kCoefficientTol && std::abs(f[x] - 1.0) > kCoefficientTol) {
      v.failure = "not boolean: f(" + format_set(x) + ") = " + format_double(f[x]);
      return v;
    }
  }
  if (std::abs(f.front()) > kCoefficientTol) {
    v.failure = "f(empty set) = 0 fails";
    return v;
  }
  if (std::abs(f.back() - 1.0) > kCoefficientTol) {
    v.failure = "f([n]) = 1 fails";
    return v;
  }
  if (std::abs(e.mean() - p1) > kCoefficientTol) {
    v.failure = "constant coefficient " + format_double(e.mean()) + " differs from p_1 = " + format_double(p1);
    return v;
  }
  for (Mask s : e.support(kCoefficientTol)) {
    if (s == 0) continue;
    const bool in_l = std::has_single_bit(s) && p.p(std::countr_zero(s)) == p1;
    if (!in_l) {
      v.failure = "coefficient on " + format_set(s) + " lies outside the singletons of L";
      return v;
    }
  }
  const double target = -std::sqrt(p1 * (1.0 - p1));
  int found = -1;
  for (int i : v.candidates) {
    const double a = e.coefficient(Mask{1} << i);
    if (std::abs(a) <= kCoefficientTol) continue;
    if (std::abs(a - target) > kCoefficientTol || found >= 0) {
      v.failure = "coefficients on L are not a single -sqrt(p_1 q_1)";
      return v;
    }
    found = i;
  }
  if (found < 0) {
    v.failure = "no coefficient on L";
    return v;
  }
  v.detected = true;
  v.center = found;
  return v;
}

std::string to_string(OneCoordinateClass c) {
  switch (c) {
    case OneCoordinateClass::Star:
      return "G1";
    case OneCoordinateClass::ComplementOfStar:
      return "G2";
    case OneCoordinateClass::Constant:
      return "G3";
  }
  return "?";
}

SubsetFamily OneCoordinateFit::family(int n) const {
  switch (kind) {
    case OneCoordinateClass::Star:
      return families::star(n, center);
    case OneCoordinateClass::ComplementOfStar:
      return families::complement_of_star(n, center);
    case OneCoordinateClass::Constant:
      break;
  }
  return value ? SubsetFamily::full(n) : SubsetFamily(n);
}

OneCoordinateFit nearest_one_coordinate(std::span<const double> f, const BiasVector& p) {
  check_fourier_n(p.n());
  if (f.size() != (std::size_t{1} << p.n())) throw DimensionError("nearest_one_coordinate: need 2^n values");
  const auto mu = mu_table(p);
  auto distance = [&](auto&& g) {
    double d = 0.0;
    for (Mask x = 0; x < f.size(); ++x) {
      const double diff = f[x] - (g(x) ? 1.0 : 0.0);
      d += diff * diff * mu[x];
    }
    return d;
  };

  std::optional<OneCoordinateFit> best;
  auto offer = [&](OneCoordinateFit fit) {
    if (!best || fit.distance2 < best->distance2 - 1e-15) best = fit;
  };
  for (int i = 0; i < p.n(); ++i) {
    offer({OneCoordinateClass::Star, i, false, distance([&](Mask x) { return (x >> i & 1) != 0; })});
  }
  for (int i = 0; i < p.n(); ++i) {
    offer({OneCoordinateClass::ComplementOfStar, i, false, distance([&](Mask x) { return (x >> i & 1) == 0; })});
  }
  offer({OneCoordinateClass::Constant, -1, false, distance([](Mask) { return false; })});
  offer({OneCoordinateClass::Constant, -1, true, distance([](Mask) { return true; })});
  return *best;
}

OneCoordinateFit nearest_one_coordinate(const SubsetFamily& family, const BiasVector& p) {
  if (family.n() != p.n()) throw DimensionError("nearest_one_coordinate: family and p disagree in n");
  return nearest_one_coordinate(indicator(family), p);
}

}  // namespace hyperhoffman
