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


// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperhoffman/bounds.hpp"
#include "hyperhoffman/fourier.hpp"
#include "hyperhoffman/oracle.hpp"
#include "hyperhoffman/spectral.hpp"
#include "hyperhoffman/stability.hpp"
#include "test_oracles.hpp"

namespace hh = hyperhoffman;
using hh::Mask;
using hh::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body, double limit_s = 0.0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s && o.pass) {
    o.pass = false;
    o.detail = "runtime " + std::to_string(secs) + " s over the " + std::to_string(limit_s) + " s limit";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              o.detail.empty() ? "" : " - ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<double> as_vector(const hh::BiasVector& p) { return {p.values().begin(), p.values().end()}; }

hh::SubsetFamily family_from_bits(int n, std::uint64_t bits) {
  return hh::SubsetFamily::from_predicate(n, [&](Mask a) { return (bits >> a & 1) != 0; });
}

double inner(const std::vector<double>& f, const std::vector<double>& g, const std::vector<double>& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i] * w[i];
  return s;
}

// Criterion 1: 2-wise maximum is p_1, attained exactly by the stars at argmax coordinates.
Outcome criterion1() {
  Outcome o;
  const std::vector<hh::RationalBiasVector> cases{
      hh::RationalBiasVector({Rational(3, 5), Rational(3, 10), Rational(1, 5)}),
      hh::RationalBiasVector({Rational(9, 20), Rational(9, 20), Rational(2, 5), Rational(3, 10)})};
  for (const auto& p : cases) {
    const auto res = hh::max_measure(p.n(), 2, p);
    const Rational p1 = p.max();
    o.require(res.max_value == p1, "oracle max " + res.max_value.get_str() + " != p_1 at n=" + std::to_string(p.n()));
    std::vector<int> argmax;
    for (int i = 0; i < p.n(); ++i) {
      if (p.p(i) == p1) argmax.push_back(i);
    }
    o.require(res.all_maximizers_are_stars && res.star_centers == argmax &&
                  res.maximizers.size() == argmax.size(),
              "maximizers are not exactly the argmax stars");
    const auto rep = hh::theorem_dispatch(hh::to_double(p), 2);
    o.require(rep.regime == hh::Regime::TwoWise, "dispatcher does not select the 2-wise regime");
    o.require(std::abs(rep.bound_value - p1.get_d()) <= 1e-9, "spectral bound differs from p_1");
  }
  return o;
}

// Criterion 2: 0.648 via majority(2,3) at p = 0.6; a non-star maximizer at p = 1/2.
Outcome criterion2() {
  Outcome o;
  const Rational p(3, 5);
  const auto res = hh::max_measure(3, 2, hh::RationalBiasVector::uniform(3, p));
  o.require(res.max_value == p * p * (3 - 2 * p) && res.max_value == Rational(81, 125),
            "max " + res.max_value.get_str() + " != 0.648");
  o.require(res.max_value > p, "max does not exceed p_1");
  o.require(res.maximizers.size() == 1 && res.maximizers[0] == hh::families::majority(3, 2, 3),
            "maximizer is not majority(2,3)");

  const auto half = hh::max_measure(3, 2, hh::RationalBiasVector::uniform(3, Rational(1, 2)));
  o.require(half.max_value == Rational(1, 2), "max at p=1/2 is " + half.max_value.get_str());
  bool non_star = false;
  for (const auto& f : half.maximizers) non_star = non_star || !hh::star_center(f).has_value();
  o.require(non_star, "no non-star maximizer at p=1/2");
  if (o.pass) o.detail = "max 81/125; " + std::to_string(half.maximizers.size()) + " maximizers at p=1/2";
  return o;
}

// Criterion 3: 3-wise, n = 4, uniform p in {0.55, 0.6, 0.65}.
Outcome criterion3() {
  Outcome o;
  for (const Rational p : {Rational(11, 20), Rational(3, 5), Rational(13, 20)}) {
    const auto res = hh::max_measure(4, 3, hh::RationalBiasVector::uniform(4, p));
    o.require(res.max_value == p, "oracle max " + res.max_value.get_str() + " != " + p.get_str());
    o.require(res.all_maximizers_are_stars, "non-star maximizer at p=" + p.get_str());
    const auto m = hh::three_wise_measure(hh::BiasVector::uniform(4, p.get_d()));
    const double l0 = hh::operator_spectrum(hh::adjacency_operator(m)).lambda_min();
    const double l1 = hh::link_level_minimum(m, 1);
    o.require(std::abs(hh::hoffman_3graph(l0, l1) - p.get_d()) <= 1e-9, "3-graph bound differs from p");
  }
  return o;
}

// Criterion 4: closed-form FGL bound equals p_1; finite-eps spectra converge.
Outcome criterion4() {
  Outcome o;
  int cases = 0;
  std::string skipped;
  for (int r : {4, 5}) {
    for (double p1 : {0.7, 0.78}) {
      const double lo = (r - 2.0) / (r - 1.0);
      const double hi = (r - 1.0) / r;
      if (!(p1 >= lo && p1 < hi)) {
        skipped += " (r=" + std::to_string(r) + ",p1=" + (p1 == 0.7 ? std::string("0.7") : std::string("0.78")) + ")";
        continue;
      }
      ++cases;
      const hh::BiasVector p({p1, p1 - 0.01, lo + 0.25 * (p1 - 0.01 - lo)});
      std::vector<double> closed{1.0 - 1.0 / ((r - 1) * (1 - p1))};
      for (int s = 1; s <= r - 2; ++s) closed.push_back(-1.0 / (r - s - 1));
      o.require(std::abs(hh::fgl_bound(closed) - p1) <= 1e-12, "closed-form FGL bound differs from p_1");
      o.require(std::abs(hh::closed_form_link_minimum(p, r, 1) - closed[1]) <= 1e-12,
                "closed-form link minimum disagrees with -1/(r-2)");

      double prev = 1e300;
      for (double eps : {1e-3, 1e-6}) {
        const auto m = hh::r_wise_measure(p, r, eps);
        std::vector<double> l{hh::operator_spectrum(hh::adjacency_operator(m)).lambda_min()};
        for (int s = 1; s <= r - 2; ++s) l.push_back(hh::link_level_minimum(m, s));
        double err = std::abs(hh::fgl_bound(l) - p1);
        for (std::size_t s = 0; s < l.size(); ++s) err = std::max(err, std::abs(l[s] - closed[s]));
        o.require(err < prev, "finite-eps error does not decrease at eps=" + hh::format_double(eps));
        prev = err;
      }
    }
  }
  o.require(cases == 2, "expected two in-regime (r, p_1) pairs");
  if (o.pass) o.detail = "in-regime pairs (r=4,p1=0.7), (r=5,p1=0.78); outside regime:" + skipped;
  return o;
}

// Criterion 5: identity suites over all 256 families at n = 3.
Outcome criterion5() {
  Outcome o;
  const double tol = 1e-10;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u2(0.05, 0.95), u3(0.05, 0.66), ug(-1.0, 1.0);
  std::size_t evaluated = 0;
  for (int construction = 2; construction <= 3; ++construction) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> pv(3);
      for (auto& x : pv) x = construction == 2 ? u2(rng) : u3(rng);
      const hh::BiasVector p(pv);
      const auto m = construction == 2 ? hh::two_wise_measure(p) : hh::three_wise_measure(p);
      const auto t = hh::adjacency_operator(m);
      const auto spec = hh::operator_spectrum(t);
      const auto mu2 = [&](Mask x, Mask y) {
        return construction == 2 ? oracles::mu2_two_wise(pv, x, y) : oracles::mu2_three_wise(pv, x, y);
      };
      std::vector<double> w(8), ones(8, 1.0), g(8);
      for (Mask x = 0; x < 8; ++x) w[x] = oracles::mu(pv, x);
      for (auto& x : g) x = ug(rng);
      const auto tg = t.apply(g);
      const auto t1 = t.apply(ones);
      for (double v : t1) o.require(std::abs(v - 1.0) <= tol, "T1 != 1");
      o.require(std::abs(inner(ones, ones, w) - 1.0) <= tol, "<1,1> != 1");

      for (std::uint64_t bits = 0; bits < 256; ++bits) {
        ++evaluated;
        const auto fam = family_from_bits(3, bits);
        const auto phi = hh::indicator(fam);
        const double mean = hh::measure(p, fam);
        double e2g = 0.0;
        for (Mask x = 0; x < 8; ++x) {
          for (Mask y = 0; y < 8; ++y) e2g += phi[x] * g[y] * mu2(x, y);
        }
        const auto tphi = t.apply(phi);
        o.require(std::abs(inner(phi, tg, w) - e2g) <= tol, "<f,Tg> != E_mu2[f,g]");
        o.require(std::abs(inner(phi, tg, w) - inner(tphi, g, w)) <= tol, "<f,Tg> != <Tf,g>");
        o.require(std::abs(inner(phi, ones, w) - mean) <= tol, "<f,1> != E[f]");
        o.require(std::abs(inner(phi, phi, w) - mean) <= tol, "<f,f> != E[f]");

        const auto e = hh::expand(fam, p);
        const double e2 = oracles::double_sum(phi, mu2);
        o.require(std::abs(e.total_mass() - mean) <= tol, "Parseval fails");
        o.require(std::abs(hh::quadratic_form(e, spec) - e2) <= tol, "quadratic form != double sum");
        o.require(hh::hoffman_deficit(e, spec) >= -tol, "Hoffman deficit negative for " + fam.to_hex());

        if (construction == 3 && !fam.empty()) {
          double top = -1e300;
          for (Mask x : fam.members()) top = std::max(top, tphi[x]);
          o.require(e2 <= mean * top + tol, "link expectation inequality fails for " + fam.to_hex());
          if (hh::is_independent(fam, m)) o.require(top <= 0.5 + tol, "link bound 1/2 fails for " + fam.to_hex());
        }
      }
    }
  }

  // Exact spot checks.
  const hh::RationalBiasVector rp({Rational(3, 5), Rational(2, 5), Rational(1, 3)});
  const auto m2 = hh::two_wise_measure(rp);
  const auto m3 = hh::three_wise_measure(rp);
  for (std::uint64_t bits : {0x00ull, 0xf0ull, 0xaaull, 0xe8ull, 0xffull, 0x80ull}) {
    const auto fam = family_from_bits(3, bits);
    Rational mean = hh::measure(rp, fam);
    for (const auto* m : {&m2, &m3}) {
      Rational row = 0, e2 = 0;
      for (Mask x : fam.members()) {
        for (Mask y = 0; y < 8; ++y) row += m->evaluate({x, y});
        for (Mask y : fam.members()) e2 += m->evaluate({x, y});
      }
      o.require(row == mean, "E_mu2[f,1] != E[f] exactly");
      if (m == &m2 && hh::is_independent(fam, m2)) o.require(e2 == 0, "independent family with E_mu2[f,f] != 0");
    }
  }
  if (o.pass) o.detail = std::to_string(evaluated) + " family evaluations";
  return o;
}

// Criterion 6: tau <= 4 q^2 eps / ((2p-1)(3-4p)) over every 3-wise intersecting family at n = 4.
Outcome criterion6() {
  Outcome o;
  std::size_t checked = 0;
  double worst = 0.0;
  for (double p : {0.55, 0.6}) {
    const auto bias = hh::BiasVector::uniform(4, p);
    const double q = 1 - p;
    for (const auto& fam : hh::enumerate_monotone_r_wise(4, 3)) {
      if (fam.empty()) continue;
      ++checked;
      const auto e = hh::expand(fam, bias);
      const double eps = p - e.mean();
      const double tau = hh::high_degree_mass(e) / e.mean();
      const double bound = 4 * q * q * eps / ((2 * p - 1) * (3 - 4 * p));
      o.require(tau <= bound + 1e-12, "tau " + hh::format_double(tau) + " > " + hh::format_double(bound) +
                                          " for " + fam.to_hex() + " at p=" + hh::format_double(p));
      if (bound > 0) worst = std::max(worst, tau / bound);
    }
  }
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu families, 0 violations, max tau/bound %.4f", checked, worst);
    o.detail = buf;
  }
  return o;
}

// Criterion 7: the p = 1/2 and p < 1/2 cases of the stability statement.
Outcome criterion7() {
  Outcome o;
  const Rational half(1, 2);
  Rational best = 0;
  for (int n = 3; n <= 5; ++n) {
    const auto p = hh::RationalBiasVector::uniform(n, half);
    for (const auto& fam : hh::enumerate_monotone_r_wise(n, 3)) {
      if (fam.empty() || hh::inside_a_star(fam)) continue;
      const Rational mu = hh::measure(p, fam);
      if (mu > best) best = mu;
      o.require(mu <= Rational(5, 16), "non-star family " + fam.to_hex() + " has measure " + mu.get_str());
    }
  }
  o.require(best == Rational(5, 16), "largest non-star measure is " + best.get_str() + ", not 5/16");

  const auto c3 = hh::stability_case_analysis(0.3);
  const auto c4 = hh::stability_case_analysis(0.4);
  o.require(std::abs(c3.eps_p - 0.21) <= 1e-12, "eps_p(0.3) = " + hh::format_double(c3.eps_p));
  o.require(std::abs(c4.eps_p - 0.2208) <= 1e-12, "eps_p(0.4) = " + hh::format_double(c4.eps_p));
  for (const Rational p : {Rational(3, 10), Rational(2, 5)}) {
    const int i = hh::ak_band(p);
    const auto res = hh::max_measure_t_intersecting(4, 2, hh::RationalBiasVector::uniform(4, p));
    o.require(res.max_value <= hh::ak_measure(p, i),
              "2-intersecting family above mu(G_i) at p=" + p.get_str());
  }
  return o;
}

// Criterion 8: every f at n = 3 with ||f^{>1}||^2 = delta <= 0.01 is within 4.5 delta of a one-coordinate g.
Outcome criterion8() {
  Outcome o;
  std::size_t small = 0;
  for (double p : {0.55, 0.6}) {
    const auto bias = hh::BiasVector::uniform(3, p);
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
      const auto fam = family_from_bits(3, bits);
      const double delta = hh::high_degree_mass(hh::expand(fam, bias));
      if (delta > 0.01) continue;
      ++small;
      const auto fit = hh::nearest_one_coordinate(fam, bias);
      o.require(fit.distance2 <= hh::kDefaultKsSlack * delta + 1e-9,
                "f=" + fam.to_hex() + " distance " + hh::format_double(fit.distance2) + " > 4.5 delta");
    }
  }
  if (o.pass) o.detail = std::to_string(small) + " functions with delta <= 0.01";
  return o;
}

// Criterion 9: cross-intersecting maxima.
Outcome criterion9() {
  Outcome o;
  for (const Rational p : {Rational(3, 10), Rational(2, 5), Rational(1, 2)}) {
    std::vector<hh::RationalBiasVector> ps(2, hh::RationalBiasVector::uniform(3, p));
    const auto res = hh::cross_max<Rational>(3, ps);
    o.require(res.max_value == p * p, "r=2 cross max " + res.max_value.get_str() + " != p^2 at p=" + p.get_str());
    o.require(res.identical_stars_attain, "identical stars do not attain the max at p=" + p.get_str());
  }
  const Rational half(1, 2);
  std::vector<hh::RationalBiasVector> ps(3, hh::RationalBiasVector::uniform(3, half));
  const auto res = hh::cross_max<Rational>(3, ps);
  const bool within = res.max_value <= half * half * half;
  o.detail = "conjecture evidence r=3,n=3,p=1/2: max " + res.max_value.get_str() + (within ? " <= " : " > ") +
             "1/8, identical stars attain: " + (res.identical_stars_attain ? "yes" : "no") + ", " +
             std::to_string(res.tuples_enumerated) + " tuples";
  return o;
}

}  // namespace

int main() {
  report(1, "2-wise maximum equals p_1 with star maximizers", criterion1, 5.0);
  report(2, "sharpness of the 1/2 threshold", criterion2);
  report(3, "3-wise maximum equals p at n=4", criterion3, 60.0);
  report(4, "r-wise product bound from closed-form and finite-eps spectra", criterion4);
  report(5, "identity suites over all families at n=3", criterion5, 30.0);
  report(6, "literal tau inequality at n=4", criterion6);
  report(7, "p=1/2 and p<1/2 cases", criterion7);
  report(8, "one-coordinate approximation at n=3", criterion8);
  report(9, "cross-intersecting maxima", criterion9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
