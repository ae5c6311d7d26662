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


#include "hyperhoffman/serialize.hpp"

#include <sstream>

namespace hyperhoffman {

namespace {

Json masks_json(std::span<const Mask> masks) {
  Json arr = Json::array();
  for (Mask m : masks) arr.push_back(format_set(m));
  return arr;
}

template <Scalar T>
Json oracle_json(const OracleResult<T>& o) {
  Json j;
  j["n"] = o.n;
  j["r"] = o.r;
  Json p = Json::array();
  for (const auto& x : o.p) p.push_back(json_value(x));
  j["p"] = p;
  j["max_value"] = json_value(o.max_value);
  Json maxs = Json::array();
  for (const auto& f : o.maximizers) maxs.push_back(report_json(f));
  j["maximizers"] = maxs;
  j["all_maximizers_are_stars"] = o.all_maximizers_are_stars;
  Json centers = Json::array();
  for (int c : o.star_centers) centers.push_back(c + 1);
  j["star_centers"] = centers;
  j["families_enumerated"] = o.families_enumerated;
  return j;
}

template <Scalar T>
Json cross_json(const CrossResult<T>& c) {
  Json j;
  j["n"] = c.n;
  j["r"] = c.r;
  j["max_value"] = json_value(c.max_value);
  Json maxs = Json::array();
  for (const auto& tuple : c.maximizers) {
    Json t = Json::array();
    for (const auto& f : tuple) t.push_back(report_json(f));
    maxs.push_back(t);
  }
  j["maximizers"] = maxs;
  j["identical_stars_attain"] = c.identical_stars_attain;
  j["all_maximizers_identical_stars"] = c.all_maximizers_identical_stars;
  j["tuples_enumerated"] = c.tuples_enumerated;
  return j;
}

Json optional_json(const std::optional<double>& x) { return x ? json_value(*x) : Json(nullptr); }

std::string csv_number(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

}  // namespace

Json json_value(double x) { return x; }
Json json_value(const Rational& x) { return to_string(x); }

Json report_json(const BiasVector& p) {
  Json arr = Json::array();
  for (double x : p.values()) arr.push_back(x);
  return arr;
}

Json report_json(const RationalBiasVector& p) {
  Json arr = Json::array();
  for (const auto& x : p.values()) arr.push_back(to_string(x));
  return arr;
}

Json report_json(const SubsetFamily& family) {
  Json j;
  j["n"] = family.n();
  j["hex"] = family.to_hex();
  return j;
}

SubsetFamily family_from_json(const Json& j) {
  return SubsetFamily::from_hex(j.at("n").get<int>(), j.at("hex").get<std::string>());
}

Json report_json(const BaseTensor& base) {
  Json j;
  j["arity"] = base.arity();
  Json classes = Json::array();
  for (double c : base.classes()) classes.push_back(c);
  j["classes_by_zero_count"] = classes;
  j["bias"] = base.bias();
  return j;
}

Json report_json(const ProductMeasure& m) {
  Json j;
  j["n"] = m.n();
  j["arity"] = m.arity();
  j["kind"] = to_string(m.kind());
  j["epsilon"] = optional_json(m.epsilon());
  Json bases = Json::array();
  for (int i = 0; i < m.n(); ++i) bases.push_back(report_json(m.base(i)));
  j["bases"] = bases;
  return j;
}

Json report_json(const SpectrumReport& s) {
  Json j;
  j["n"] = s.n();
  Json l = Json::array();
  for (double x : s.coordinate_lambdas()) l.push_back(x);
  j["coordinate_lambdas"] = l;
  j["lambda_min"] = s.lambda_min();
  j["argmin_sets"] = masks_json(s.argmin_sets());
  j["second_min"] = optional_json(s.second_min());
  j["second_argmin_sets"] = masks_json(s.second_argmin_sets());
  j["restricted"] = s.restricted();
  return j;
}

Json report_json(const BoundReport& b) {
  Json j;
  j["r"] = b.r;
  j["p_sorted"] = report_json(b.p);
  j["regime"] = to_string(b.regime);
  j["method"] = b.method ? Json(to_string(*b.method)) : Json(nullptr);
  j["construction"] = to_string(b.construction);
  j["construction_arity"] = b.construction_arity;
  j["epsilon"] = optional_json(b.epsilon);
  j["lambda_0"] = b.lambda_0;
  Json links = Json::array();
  for (double x : b.link_minima) links.push_back(x);
  j["link_minima"] = links;
  j["bound_value"] = b.bound_value;
  j["claims_p1"] = b.claims_p1();
  j["shifted_bound"] = optional_json(b.shifted_bound);
  j["finite_eps_bound"] = optional_json(b.finite_eps_bound);
  j["violated"] = b.violated.empty() ? Json(nullptr) : Json(b.violated);
  j["conjectured_regime"] = b.conjectured_regime;
  return j;
}

Json report_json(const OracleResult<double>& o) { return oracle_json(o); }
Json report_json(const OracleResult<Rational>& o) { return oracle_json(o); }
Json report_json(const CrossResult<double>& c) { return cross_json(c); }
Json report_json(const CrossResult<Rational>& c) { return cross_json(c); }

Json report_json(const OneCoordinateFit& f) {
  Json j;
  j["class"] = to_string(f.kind);
  j["center"] = f.center >= 0 ? Json(f.center + 1) : Json(nullptr);
  if (f.kind == OneCoordinateClass::Constant) j["value"] = f.value ? 1 : 0;
  j["distance2"] = f.distance2;
  return j;
}

Json report_json(const StabilityReport& s) {
  Json j;
  j["n"] = s.n;
  j["r"] = s.r;
  j["p"] = s.p;
  j["eps"] = s.eps;
  j["measure"] = s.mean;
  j["tau"] = s.tau;
  j["tau_bound"] = s.tau_bound;
  j["delta"] = s.delta;
  j["c_p"] = s.c_p;
  j["cp_eps"] = s.cp_eps;
  j["high_degree_mass"] = s.high_degree_mass;
  j["nearest_star"] = s.nearest_star + 1;
  j["nearest_star_distance"] = s.nearest_star_distance;
  j["nearest_one_coordinate"] = report_json(s.nearest);
  j["eps_threshold"] = s.eps_threshold;
  j["ks_slack"] = s.config.ks_slack;
  j["verdict"] = to_string(s.verdict);
  return j;
}

Json report_json(const CaseAnalysis& c) {
  Json j;
  j["p"] = c.p;
  j["case"] = to_string(c.kind);
  j["ak_index"] = c.ak_index ? Json(*c.ak_index) : Json(nullptr);
  j["extremal_value"] = c.extremal_value;
  j["eps_p"] = c.eps_p;
  return j;
}

std::string census_csv(std::span<const CensusRecord> records) {
  std::ostringstream os;
  os << "family,eps,tau,tau_bound,star_distance,cp_eps\n";
  for (const auto& r : records) {
    os << r.family.to_hex() << ',' << format_double(r.eps) << ',' << format_double(r.tau) << ','
       << csv_number(r.tau_bound) << ',' << format_double(r.star_distance) << ',' << csv_number(r.cp_eps) << '\n';
  }
  return os.str();
}

std::string fourier_csv(const FourierExpansion& e, const SpectrumReport& spectrum) {
  if (spectrum.n() != e.n()) throw DimensionError("fourier_csv: spectrum and expansion disagree in n");
  std::ostringstream os;
  os << "set,coefficient,lambda\n";
  const auto c = e.coefficients();
  for (Mask s = 0; s < c.size(); ++s) {
    os << s << ',' << format_double(c[s]) << ',' << format_double(spectrum.lambda(s)) << '\n';
  }
  return os.str();
}

}  // namespace hyperhoffman
