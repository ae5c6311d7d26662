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


#include "hyperhoffman/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hyperhoffman {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr std::uint32_t kSeed = 20260;

class Check {
 public:
  Check(std::string id, std::string property) {
    result_.id = std::move(id);
    result_.property = std::move(property);
  }

  /// Records the first failure only.
  void fail(std::string detail, Json witness) {
    if (result_.status == CheckStatus::Fail) return;
    result_.status = CheckStatus::Fail;
    result_.detail = std::move(detail);
    result_.witness = std::move(witness);
  }

  void info(std::string detail) {
    if (result_.status == CheckStatus::Pass) result_.status = CheckStatus::Info;
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += detail;
  }

  bool failed() const { return result_.status == CheckStatus::Fail; }
  CheckResult done(std::string summary) {
    if (result_.status == CheckStatus::Pass) result_.detail = std::move(summary);
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

Json witness(const SubsetFamily& f, const BiasVector& p, double lhs, double rhs) {
  Json j;
  j["family"] = report_json(f);
  j["p"] = report_json(p);
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  return j;
}

BiasVector random_p(std::mt19937& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(d(rng));
  return BiasVector(std::move(v));
}

std::vector<SubsetFamily> all_families(int n) {
  std::vector<SubsetFamily> out;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    out.push_back(SubsetFamily::from_predicate(n, [&](Mask a) { return (bits >> a & 1) != 0; }));
  }
  return out;
}

double e2(const ProductMeasure& m, std::span<const double> f, std::span<const double> g) {
  double s = 0.0;
  for (Mask x = 0; x < f.size(); ++x) {
    for (Mask y = 0; y < g.size(); ++y) s += f[x] * g[y] * m.evaluate({x, y});
  }
  return s;
}

double inner(std::span<const double> f, std::span<const double> g, std::span<const double> w) {
  return weighted_inner(f, g, w);
}

std::vector<ProductMeasure> constructions(const BiasVector& p) {
  return {two_wise_measure(p), three_wise_measure(p)};
}

CheckResult check_validity(const RunConfig& c) {
  Check chk("01-validity", "base tensors have mass 1 and a positive (r-1)-marginal");
  if (!c.base_classes.empty()) {
    std::vector<double> classes;
    for (const auto& s : c.base_classes) classes.push_back(to_double(parse_rational(s)));
    try {
      validate(BaseTensor::from_classes(classes));
    } catch (const ValidityError& e) {
      Json w;
      w["classes"] = classes;
      chk.fail(e.what(), w);
    }
    return chk.done("custom base tensor is valid");
  }
  const BiasVector p = c.p.empty() ? BiasVector({0.6, 0.3, 0.2}) : resolved_p(c);
  for (int i = 0; i < p.n(); ++i) {
    const double pi = p.p(i);
    try {
      validate(base_2wise(pi));
      if (pi < 2.0 / 3.0) validate(base_3wise(pi));
      if (c.r >= 4 && pi < static_cast<double>(c.r - 1) / c.r) {
        validate(base_rwise(pi, c.r, c.eps.value_or(default_epsilon(pi, c.r))));
      }
    } catch (const ValidityError& e) {
      Json w;
      w["p"] = pi;
      chk.fail(e.what(), w);
    }
  }
  return chk.done("all constructions valid for p");
}

CheckResult check_inner_product(std::mt19937& rng) {
  Check chk("02-inner-product", "<f,Tg> = E2[f,g], T self-adjoint, T1 = 1, <1,1> = 1, <phi,1> = <phi,phi> = E[phi]");
  const int n = 3;
  const BiasVector p = random_p(rng, n, 0.05, 0.62);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (const auto& m : constructions(p)) {
    const auto t = adjacency_operator(m);
    const auto w = mu_table(p);
    std::vector<double> f(w.size()), g(w.size()), ones(w.size(), 1.0);
    for (auto& x : f) x = d(rng);
    for (auto& x : g) x = d(rng);
    const auto tf = t.apply(f), tg = t.apply(g), t1 = t.apply(ones);
    const double a = inner(f, tg, w), b = e2(m, f, g), c2 = inner(tf, g, w);
    if (std::abs(a - b) > kIdentityTol) chk.fail("<f,Tg> != E2[f,g]", witness(SubsetFamily(n), p, a, b));
    if (std::abs(a - c2) > kIdentityTol) chk.fail("T not self-adjoint", witness(SubsetFamily(n), p, a, c2));
    for (double v : t1) {
      if (std::abs(v - 1.0) > kIdentityTol) chk.fail("T1 != 1", witness(SubsetFamily(n), p, v, 1.0));
    }
    const double one = inner(ones, ones, w);
    if (std::abs(one - 1.0) > kIdentityTol) chk.fail("<1,1> != 1", witness(SubsetFamily(n), p, one, 1.0));
    for (const auto& fam : all_families(n)) {
      const auto phi = indicator(fam);
      const double mean = measure<double>(w, fam);
      const double pv = inner(phi, ones, w), pp = inner(phi, phi, w);
      if (std::abs(pv - mean) > kIdentityTol) chk.fail("<phi,1> != E[phi]", witness(fam, p, pv, mean));
      if (std::abs(pp - mean) > kIdentityTol) chk.fail("<phi,phi> != E[phi]", witness(fam, p, pp, mean));
    }
  }
  return chk.done("six identities hold for both constructions at n=3");
}

CheckResult check_fourier(std::mt19937& rng) {
  Check chk("03-fourier", "E[phi] = f0 = sum of squares; E2[phi,phi] = sum lambda_S f_S^2");
  const int n = 3;
  const BiasVector p = random_p(rng, n, 0.05, 0.62);
  for (const auto& m : constructions(p)) {
    const auto spectrum = operator_spectrum(adjacency_operator(m));
    for (const auto& fam : all_families(n)) {
      const auto e = expand(fam, p);
      const double mean = measure(p, fam);
      if (std::abs(e.mean() - mean) > kIdentityTol) chk.fail("f0 != E[phi]", witness(fam, p, e.mean(), mean));
      if (std::abs(e.total_mass() - mean) > kIdentityTol) chk.fail("Parseval", witness(fam, p, e.total_mass(), mean));
      const auto phi = indicator(fam);
      const double q = quadratic_form(e, spectrum), direct = e2(m, phi, phi);
      if (std::abs(q - direct) > kIdentityTol) chk.fail("quadratic form", witness(fam, p, q, direct));
    }
  }
  return chk.done("256 families, both constructions");
}

CheckResult check_hoffman_deficit(std::mt19937& rng) {
  Check chk("04-hoffman-deficit", "E2[phi,phi] >= E[phi](1 - (1 - lambda_min)(1 - E[phi]))");
  const int n = 3;
  const BiasVector p = random_p(rng, n, 0.05, 0.62);
  for (const auto& m : constructions(p)) {
    const auto spectrum = operator_spectrum(adjacency_operator(m));
    for (const auto& fam : all_families(n)) {
      const double slack = hoffman_deficit(expand(fam, p), spectrum);
      if (slack < -kIdentityTol) chk.fail("negative slack", witness(fam, p, slack, 0.0));
    }
  }
  return chk.done("slack >= 0 for 256 families, both constructions");
}

CheckResult check_link_expectation(std::mt19937& rng) {
  Check chk("05-link-expectation",
            "E2[phi,phi] <= E[phi] max_{x in phi} E_{1,x}[phi]; independent sets have E_{1,x}[phi] <= 1/2");
  const int n = 3;
  const BiasVector p = random_p(rng, n, 0.05, 0.62);
  const auto m = three_wise_measure(p);
  const auto t = adjacency_operator(m);
  const auto w = mu_table(p);
  for (const auto& fam : all_families(n)) {
    if (fam.empty()) continue;
    const auto phi = indicator(fam);
    const auto tphi = t.apply(phi);
    double top = -1e300;
    for (Mask x : fam.members()) top = std::max(top, tphi[x]);
    const double lhs = e2(m, phi, phi), mean = measure<double>(w, fam);
    if (lhs > mean * top + kIdentityTol) chk.fail("link expectation inequality", witness(fam, p, lhs, mean * top));
    if (is_independent(fam, m) && top > 0.5 + kIdentityTol) chk.fail("link bound 1/2", witness(fam, p, top, 0.5));
  }
  return chk.done("256 families under the 3-wise construction");
}

CheckResult check_bounds(const RunConfig& c) {
  Check chk("06-bound-oracle", "oracle maximum <= dispatched bound, stars attain it");
  std::vector<std::pair<RationalBiasVector, int>> cases;
  if (!c.p.empty()) {
    cases.emplace_back(resolved_p_exact(c), c.r);
  } else {
    cases.emplace_back(RationalBiasVector({Rational(3, 5), Rational(3, 10), Rational(1, 5)}), 2);
    cases.emplace_back(RationalBiasVector::uniform(4, Rational(3, 5)), 3);
    cases.emplace_back(RationalBiasVector({Rational(7, 10), Rational(3, 5), Rational(1, 2)}), 4);
  }
  int claimed = 0;
  for (const auto& [pe, r] : cases) {
    const BiasVector p = to_double(pe);
    const auto rep = theorem_dispatch(p, r);
    if (!rep.claims_p1()) {
      chk.info("regime violated for r=" + std::to_string(r) + ": " + rep.violated);
      continue;
    }
    ++claimed;
    if (std::abs(rep.bound_value - p.max()) > 1e-9) {
      Json w;
      w["p"] = report_json(p);
      w["bound"] = rep.bound_value;
      chk.fail("bound differs from p_1", w);
    }
    if (p.n() > kOracleMaxN) {
      chk.info("oracle skipped: n above cap");
      continue;
    }
    const auto o = max_measure(p.n(), r, pe.sorted());
    const Rational p1 = pe.max();
    if (o.max_value > p1 || !o.all_maximizers_are_stars) {
      Json w;
      w["p"] = report_json(pe);
      w["oracle_max"] = to_string(o.max_value);
      w["bound"] = to_string(p1);
      w["maximizers"] = Json::array();
      for (const auto& f : o.maximizers) w["maximizers"].push_back(report_json(f));
      chk.fail("oracle exceeds bound or a non-star maximizer", w);
    }
  }
  return chk.done(std::to_string(claimed) + " regime case(s) agree with the oracle");
}

CheckResult check_stability(const RunConfig& c) {
  Check chk("07-stability-census", "tau <= tau_bound for every 3-wise intersecting family at n=4");
  std::vector<double> ps{0.55, 0.6};
  int r = 3;
  if (!c.p.empty() && resolved_p_exact(c).is_uniform() && in_stability_regime(c.r, resolved_p(c).p(0)) &&
      resolved_n(c) <= kOracleMaxN && c.r >= 3) {
    ps = {resolved_p(c).p(0)};
    r = c.r;
  }
  std::size_t records = 0;
  for (double p : ps) {
    for (const auto& rec : stability_census(4, r, p, 1.0)) {
      ++records;
      if (rec.tau_bound && rec.tau > *rec.tau_bound + kIdentityTol) {
        chk.fail("tau exceeds bound", witness(rec.family, BiasVector::uniform(4, p), rec.tau, *rec.tau_bound));
      }
    }
  }
  return chk.done(std::to_string(records) + " census records within bound");
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Info:
      return "info";
  }
  return "unknown";
}

bool VerifySuiteResult::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

VerifySuiteResult run_verify(const RunConfig& config) {
  std::mt19937 rng(kSeed);
  VerifySuiteResult out;
  out.checks.push_back(check_validity(config));
  out.checks.push_back(check_inner_product(rng));
  out.checks.push_back(check_fourier(rng));
  out.checks.push_back(check_hoffman_deficit(rng));
  out.checks.push_back(check_link_expectation(rng));
  out.checks.push_back(check_bounds(config));
  out.checks.push_back(check_stability(config));
  return out;
}

Json report_json(const VerifySuiteResult& v) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json e;
    e["id"] = c.id;
    e["property"] = c.property;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    if (c.status == CheckStatus::Fail) e["witness"] = c.witness;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["passed"] = v.passed();
  return j;
}

}  // namespace hyperhoffman
