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


#include "hyperhoffman/stability.hpp"

#include <cmath>

namespace hyperhoffman {

namespace {

template <Scalar T>
bool regime_impl(int r, const T& p) {
  if (r < 2) return false;
  if (r == 2) return p > 0 && 2 * p < 1;
  // (r-2)/(r-1) < p < (r-1)/r, cross-multiplied.
  return (r - 1) * p > r - 2 && r * p < r - 1;
}

template <Scalar T>
int band_impl(const T& p) {
  if (!(p > 0 && 2 * p < 1)) throw RangeError("ak_band: need 0 < p < 1/2");
  for (int i = 0;; ++i) {
    // i/(2i+1) <= p <= (i+1)/(2i+3)
    if (i <= (2 * i + 1) * p && (2 * i + 3) * p <= i + 1) return i;
    if (i > 100000000) throw RangeError("ak_band: p too close to 1/2");
  }
}

}  // namespace

bool in_stability_regime(int r, double p) { return regime_impl(r, p); }
bool in_stability_regime(int r, const Rational& p) { return regime_impl(r, p); }

int ak_band(double p) { return band_impl(p); }
int ak_band(const Rational& p) { return band_impl(p); }

double tau_bound_from_eigenvalues(int r, double p, double eps) {
  if (!in_stability_regime(r, p)) throw RangeError("tau_bound_from_eigenvalues: p outside the regime");
  const double q = 1.0 - p;
  const double l1 = 1.0 - 1.0 / ((r - 1) * q);
  const double l3 = l1 * l1 * l1;
  const double b = static_cast<double>(r - 2) / (r - 1);
  const double f0 = p - eps;
  return (b - f0 - l1 * (1.0 - f0)) / (l3 - l1);
}

double g2_elimination_threshold(int r, double p, double slack) {
  const double cp = c_p(r, p);
  const double q = 1.0 - p;
  auto gap = [&](double eps) {
    const double d = std::sqrt(p - eps) - std::sqrt(q);
    return d * d - slack * cp * eps / 4.0;
  };
  if (gap(p) > 0) return p;
  double lo = 0.0, hi = p;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0 ? lo : hi) = mid;
  }
  return lo;
}

std::string to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::WithinBound:
      return "within-bound";
    case StabilityVerdict::HypothesisViolated:
      return "hypothesis-violated";
    case StabilityVerdict::TauExceeded:
      return "tau-exceeded";
    case StabilityVerdict::NotStar:
      return "not-star";
  }
  return "unknown";
}

StabilityReport verify_stability(const SubsetFamily& family, const BiasVector& p, int r,
                                 const StabilityConfig& config) {
  if (family.n() != p.n()) throw DimensionError("verify_stability: family and p disagree in n");
  if (!p.is_uniform()) throw RangeError("verify_stability: p must be uniform");
  const double pv = p.p(0);
  if (!in_stability_regime(r, pv)) {
    throw RangeError("verify_stability: p=" + format_double(pv) + " outside the stability regime for r=" + std::to_string(r));
  }
  if (!is_r_wise_intersecting(family, r)) {
    throw ValidityError("verify_stability: family is not " + std::to_string(r) + "-wise intersecting");
  }

  StabilityReport rep;
  rep.n = p.n();
  rep.r = r;
  rep.p = pv;
  rep.config = config;
  const auto e = expand(family, p);
  rep.mean = e.mean();
  rep.eps = pv - rep.mean;
  rep.high_degree_mass = high_degree_mass(e);
  rep.tau = rep.mean > 0 ? rep.high_degree_mass / rep.mean : 0.0;
  rep.tau_bound = tau_bound(r, pv, rep.eps);
  rep.delta = pv * rep.tau_bound;
  rep.c_p = c_p(r, pv);
  rep.cp_eps = rep.c_p * rep.eps;
  rep.nearest = nearest_one_coordinate(family, p);
  rep.eps_threshold = config.eps_threshold.value_or(0.5 * g2_elimination_threshold(r, pv, config.ks_slack));

  const auto mu = mu_table(p);
  for (int i = 0; i < p.n(); ++i) {
    const double d = measure<double>(mu, family.symmetric_difference(families::star(p.n(), i)));
    if (rep.nearest_star < 0 || d < rep.nearest_star_distance) {
      rep.nearest_star = i;
      rep.nearest_star_distance = d;
    }
  }

  if (rep.tau > rep.tau_bound + 1e-10) {
    rep.verdict = StabilityVerdict::TauExceeded;
  } else if (!(rep.eps < rep.eps_threshold)) {
    rep.verdict = StabilityVerdict::HypothesisViolated;
  } else if (rep.nearest.kind != OneCoordinateClass::Star) {
    rep.verdict = StabilityVerdict::NotStar;
  } else {
    rep.verdict = StabilityVerdict::WithinBound;
  }
  return rep;
}

std::string to_string(StabilityCase c) {
  switch (c) {
    case StabilityCase::BelowHalf:
      return "below-half";
    case StabilityCase::Half:
      return "half";
    case StabilityCase::AboveHalf:
      return "above-half";
  }
  return "unknown";
}

CaseAnalysis stability_case_analysis(double p, double ks_slack) {
  if (!(p > 0 && p < 2.0 / 3.0)) throw RangeError("stability_case_analysis: need 0 < p < 2/3");
  CaseAnalysis c;
  c.p = p;
  if (p < 0.5) {
    c.kind = StabilityCase::BelowHalf;
    c.ak_index = ak_band(p);
    c.extremal_value = ak_measure(p, *c.ak_index);
    c.eps_p = p - c.extremal_value;
  } else if (p == 0.5) {
    c.kind = StabilityCase::Half;
    c.extremal_value = 5.0 / 16.0;
    c.eps_p = 3.0 / 16.0;
  } else {
    c.kind = StabilityCase::AboveHalf;
    c.extremal_value = c_p(3, p);
    c.eps_p = 0.5 * g2_elimination_threshold(3, p, ks_slack);
  }
  return c;
}

}  // namespace hyperhoffman
