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


#include "hyperhoffman/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "hyperhoffman/spectral.hpp"

namespace hyperhoffman {

namespace {

void require_below_one(double lambda, const char* who) {
  if (!(lambda < 1.0)) throw RangeError(std::string(who) + ": eigenvalue must be < 1, got " + format_double(lambda));
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double pk(const BiasVector& sorted, int k) { return k <= sorted.n() ? sorted.p(k - 1) : 0.0; }

std::vector<double> coordinate_lambdas(const BiasVector& p, int r) {
  std::vector<double> l;
  for (int i = 0; i < p.n(); ++i) l.push_back(coordinate_eigs(p.p(i), r).lambda);
  return l;
}

/// The 2-wise Hoffman bound, valid for every r.
void fill_two_wise(BoundReport& rep) {
  rep.construction_arity = 2;
  rep.construction = ConstructionKind::TwoWise;
  rep.lambda_0 = product_spectrum(coordinate_lambdas(rep.p, 2)).lambda_min();
  rep.link_minima.clear();
  rep.bound_value = clamp01(hoffman_2graph(rep.lambda_0));
}

BoundReport dispatch_sorted(const BiasVector& p, int r);

void fill_shifting(BoundReport& rep) {
  std::vector<double> shifted(rep.p.values().begin(), rep.p.values().end());
  shifted[0] = shifted[1];
  const BoundReport inner = dispatch_sorted(BiasVector(shifted), rep.r);
  rep.method = Method::Shifting;
  rep.construction_arity = inner.construction_arity;
  rep.construction = inner.construction;
  rep.epsilon = inner.epsilon;
  rep.lambda_0 = inner.lambda_0;
  rep.link_minima = inner.link_minima;
  rep.shifted_bound = inner.bound_value;
  rep.bound_value = rep.p.p(0);
}

BoundReport dispatch_sorted(const BiasVector& p, int r) {
  BoundReport rep(p);
  rep.r = r;
  const double p1 = pk(p, 1), p2 = pk(p, 2), p3 = pk(p, 3);

  if (r == 2) {
    rep.conjectured_regime = p3 < 0.5;
    fill_two_wise(rep);
    if (!(p3 < 0.5)) {
      rep.violated = "p_3 < 1/2";
    } else if (!(p1 <= 0.5 || 1.0 - p2 > p3)) {
      rep.violated = "p_1 <= 1/2 or 1 - p_2 > p_3";
    } else {
      rep.regime = Regime::TwoWise;
      rep.method = Method::TwoWiseHoffman;
    }
    return rep;
  }

  const double top = static_cast<double>(r - 1) / r;
  rep.conjectured_regime = pk(p, r + 1) < top;
  if (!(p2 < top)) {
    fill_two_wise(rep);
    rep.violated = "p_2 < " + std::to_string(r - 1) + "/" + std::to_string(r);
    return rep;
  }
  rep.regime = r == 3 ? Regime::ThreeWise : Regime::RWise;
  if (p1 >= top) {
    fill_shifting(rep);
    return rep;
  }

  const double low = static_cast<double>(r - 2) / (r - 1);
  if (p1 < low) {
    // An r-wise intersecting family is (r-1)-wise intersecting.
    const BoundReport inner = dispatch_sorted(p, r - 1);
    rep.method = inner.method;
    rep.construction_arity = inner.construction_arity;
    rep.construction = inner.construction;
    rep.epsilon = inner.epsilon;
    rep.lambda_0 = inner.lambda_0;
    rep.link_minima = inner.link_minima;
    rep.shifted_bound = inner.shifted_bound;
    rep.finite_eps_bound = inner.finite_eps_bound;
    rep.bound_value = inner.bound_value;
    return rep;
  }

  rep.construction_arity = r;
  if (r == 3) {
    rep.method = Method::ThreeGraphHoffman;
    rep.construction = ConstructionKind::ThreeWise;
    const auto m = three_wise_measure(p);
    rep.lambda_0 = operator_spectrum(adjacency_operator(m)).lambda_min();
    rep.link_minima = {link_level_minimum(m, 1)};
    rep.bound_value = clamp01(hoffman_3graph(rep.lambda_0, rep.link_minima[0]));
    return rep;
  }

  rep.method = Method::Fgl;
  rep.construction = ConstructionKind::RWise;
  rep.epsilon = 0.0;
  rep.lambda_0 = product_spectrum(coordinate_lambdas(p, r)).lambda_min();
  std::vector<double> lambdas{rep.lambda_0};
  for (int s = 1; s <= r - 2; ++s) {
    rep.link_minima.push_back(closed_form_link_minimum(p, r, s));
    lambdas.push_back(rep.link_minima.back());
  }
  rep.bound_value = clamp01(fgl_bound(lambdas));

  double eps = default_epsilon(p.p(p.n() - 1), r);
  eps = std::min(eps, default_epsilon(p1, r));
  const auto m = r_wise_measure(p, r, eps);
  std::vector<double> finite{operator_spectrum(adjacency_operator(m)).lambda_min()};
  for (int s = 1; s <= r - 2; ++s) finite.push_back(link_level_minimum(m, s));
  rep.finite_eps_bound = clamp01(fgl_bound(finite));
  return rep;
}

}  // namespace

double hoffman_2graph(double lambda_min) {
  require_below_one(lambda_min, "hoffman_2graph");
  return -lambda_min / (1.0 - lambda_min);
}

double hoffman_3graph(double lambda_min_t, double max_link_lambda_min) {
  require_below_one(lambda_min_t, "hoffman_3graph");
  require_below_one(max_link_lambda_min, "hoffman_3graph");
  return 1.0 - 1.0 / ((1.0 - lambda_min_t) * (1.0 - max_link_lambda_min));
}

double fgl_bound(std::span<const double> lambdas) {
  if (lambdas.empty()) throw RangeError("fgl_bound: need at least lambda_0");
  double prod = 1.0;
  for (double l : lambdas) {
    require_below_one(l, "fgl_bound");
    prod /= 1.0 - l;
  }
  return 1.0 - prod;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::None:
      return "none";
    case Regime::TwoWise:
      return "two-wise";
    case Regime::ThreeWise:
      return "three-wise";
    case Regime::RWise:
      return "r-wise";
  }
  return "unknown";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::TwoWiseHoffman:
      return "hoffman-2graph";
    case Method::ThreeGraphHoffman:
      return "hoffman-3graph";
    case Method::Fgl:
      return "fgl";
    case Method::Shifting:
      return "shifting";
  }
  return "unknown";
}

double closed_form_link_minimum(const BiasVector& p, int r, int s) {
  if (s < 1 || s > r - 2) throw RangeError("closed_form_link_minimum: need 1 <= s <= r-2");
  double lo = 1.0, hi = 1.0;
  for (int i = 0; i < p.n(); ++i) {
    std::vector<double> options{1.0};
    for (int a = 0; a <= s; ++a) options.push_back(factor_eigenvalue(closed_form_link_factor(p.p(i), r, a, s - a)));
    double nlo = lo, nhi = hi;
    for (double o : options) {
      nlo = std::min({nlo, lo * o, hi * o});
      nhi = std::max({nhi, lo * o, hi * o});
    }
    lo = nlo;
    hi = nhi;
  }
  return lo;
}

BoundReport theorem_dispatch(const BiasVector& p, int r) {
  if (r < 2) throw RangeError("theorem_dispatch: r must be >= 2");
  return dispatch_sorted(p.sorted(), r);
}

}  // namespace hyperhoffman
