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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hyperhoffman/oracle.hpp"
#include "hyperhoffman/spectral.hpp"

namespace hh = hyperhoffman;
using hh::Mask;

TEST(Hoffman2Graph, Examples) {
  for (double p : {0.1, 0.4, 0.6}) EXPECT_NEAR(hh::hoffman_2graph(-p / (1 - p)), p, 1e-15);
  EXPECT_DOUBLE_EQ(hh::hoffman_2graph(0.0), 0.0);
  EXPECT_DOUBLE_EQ(hh::hoffman_2graph(-1.0), 0.5);
  EXPECT_THROW(hh::hoffman_2graph(1.0), hh::RangeError);
}

TEST(Hoffman3Graph, Examples) {
  for (double p : {0.5, 0.6, 0.65}) {
    const double q = 1 - p;
    EXPECT_NEAR(hh::hoffman_3graph(1 - 1 / (2 * q), -1.0), p, 1e-15);
  }
  EXPECT_DOUBLE_EQ(hh::hoffman_3graph(0.0, 0.0), 0.0);
  EXPECT_NEAR(hh::hoffman_3graph(-0.25, -1.0), 0.6, 1e-15);
  EXPECT_THROW(hh::hoffman_3graph(1.0, -1.0), hh::RangeError);
  EXPECT_THROW(hh::hoffman_3graph(-0.5, 1.5), hh::RangeError);
}

TEST(FglBound, Examples) {
  const std::vector<double> three{-0.25, -1.0};
  EXPECT_NEAR(hh::fgl_bound(three), hh::hoffman_3graph(-0.25, -1.0), 1e-15);
  const std::vector<double> four{-1.0 / 9.0, -0.5, -1.0};
  EXPECT_NEAR(hh::fgl_bound(four), 0.7, 1e-14);
  EXPECT_DOUBLE_EQ(hh::fgl_bound(std::vector<double>{0.0, 0.0, 0.0}), 0.0);
  EXPECT_THROW(hh::fgl_bound(std::vector<double>{-0.5, 1.0}), hh::RangeError);
}

TEST(FglBound, ClosedFormsGiveP) {
  // With lambda_0 = 1 - 1/((r-1)q) and lambda_s = -1/(r-s-1) the product
  // telescopes to p.
  for (int r = 3; r <= 8; ++r) {
    for (double t : {0.1, 0.5, 0.9}) {
      const double lo = (r - 2.0) / (r - 1.0);
      const double p = lo + t * ((r - 1.0) / r - lo);
      std::vector<double> l{hh::coordinate_eigs(p, r).lambda};
      for (int s = 1; s <= r - 2; ++s) l.push_back(hh::closed_form_link_minimum(hh::BiasVector::uniform(3, p), r, s));
      for (int s = 1; s <= r - 2; ++s) EXPECT_NEAR(l[static_cast<std::size_t>(s)], -1.0 / (r - s - 1), 1e-14);
      EXPECT_NEAR(hh::fgl_bound(l), p, 1e-12) << r << " " << p;
    }
  }
}

TEST(Dispatch, TwoWiseRegime) {
  auto rep = hh::theorem_dispatch(hh::BiasVector({0.3, 0.6, 0.2}), 2);
  EXPECT_EQ(rep.regime, hh::Regime::TwoWise);
  EXPECT_TRUE(rep.claims_p1());
  EXPECT_NEAR(rep.bound_value, 0.6, 1e-9);
  EXPECT_NEAR(rep.p.p(0), 0.6, 0.0);
  EXPECT_TRUE(rep.violated.empty());
}

TEST(Dispatch, TwoWiseViolated) {
  auto rep = hh::theorem_dispatch(hh::BiasVector::uniform(3, 0.6), 2);
  EXPECT_EQ(rep.regime, hh::Regime::None);
  EXPECT_FALSE(rep.violated.empty());
  EXPECT_FALSE(rep.conjectured_regime);
  auto oracle = hh::max_measure(3, 2, hh::RationalBiasVector::uniform(3, hh::Rational(3, 5)));
  EXPECT_EQ(oracle.max_value, hh::Rational(81, 125));
  EXPECT_GT(oracle.max_value.get_d(), 0.6);

  auto conj = hh::theorem_dispatch(hh::BiasVector({0.6, 0.55, 0.45}), 2);
  EXPECT_EQ(conj.regime, hh::Regime::None);
  EXPECT_TRUE(conj.conjectured_regime);
}

TEST(Dispatch, ThreeWiseRegime) {
  auto rep = hh::theorem_dispatch(hh::BiasVector({0.6, 0.55, 0.4}), 3);
  EXPECT_EQ(rep.regime, hh::Regime::ThreeWise);
  ASSERT_TRUE(rep.method.has_value());
  EXPECT_EQ(*rep.method, hh::Method::ThreeGraphHoffman);
  EXPECT_NEAR(rep.lambda_0, -0.25, 1e-14);
  ASSERT_EQ(rep.link_minima.size(), 1u);
  EXPECT_NEAR(rep.link_minima[0], -1.0, 1e-14);
  EXPECT_NEAR(rep.bound_value, 0.6, 1e-9);
}

TEST(Dispatch, RWiseRegime) {
  auto rep = hh::theorem_dispatch(hh::BiasVector({0.7, 0.6, 0.5}), 4);
  EXPECT_EQ(rep.regime, hh::Regime::RWise);
  EXPECT_NEAR(rep.bound_value, 0.7, 1e-9);
  ASSERT_TRUE(rep.finite_eps_bound.has_value());
  EXPECT_NEAR(*rep.finite_eps_bound, 0.7, 1e-4);
  EXPECT_EQ(rep.link_minima.size(), 2u);
}

TEST(Dispatch, ShiftingAndReductions) {
  auto shift = hh::theorem_dispatch(hh::BiasVector({0.8, 0.6, 0.5}), 3);
  EXPECT_EQ(shift.regime, hh::Regime::ThreeWise);
  ASSERT_TRUE(shift.method.has_value());
  EXPECT_EQ(*shift.method, hh::Method::Shifting);
  EXPECT_NEAR(shift.bound_value, 0.8, 1e-12);
  ASSERT_TRUE(shift.shifted_bound.has_value());
  EXPECT_NEAR(*shift.shifted_bound, 0.6, 1e-9);

  // p_1 below (r-2)/(r-1): an r-wise family is (r-1)-wise intersecting.
  auto low = hh::theorem_dispatch(hh::BiasVector({0.4, 0.3, 0.2}), 3);
  EXPECT_EQ(low.construction_arity, 2);
  EXPECT_NEAR(low.bound_value, 0.4, 1e-9);
  EXPECT_TRUE(low.claims_p1());

  auto none = hh::theorem_dispatch(hh::BiasVector({0.7, 0.7, 0.2}), 3);
  EXPECT_EQ(none.regime, hh::Regime::None);
  EXPECT_FALSE(none.violated.empty());
}

TEST(Dispatch, BoundInUnitInterval) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(4);
    for (auto& x : p) x = u(rng);
    const int r = 2 + trial % 4;
    auto rep = hh::theorem_dispatch(hh::BiasVector(p), r);
    EXPECT_GE(rep.bound_value, -1e-12);
    EXPECT_LE(rep.bound_value, 1.0 + 1e-12);
    if (rep.claims_p1()) EXPECT_NEAR(rep.bound_value, rep.p.p(0), 1e-9) << trial;
  }
}

TEST(Soundness, OracleNeverExceedsClaimedBound) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> grid(1, 19);
  int claimed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 2 + trial % 3;
    const int n = r == 2 ? 4 + trial % 2 : 4;
    std::vector<hh::Rational> p;
    for (int i = 0; i < n; ++i) {
      p.emplace_back(grid(rng), 20);
      p.back().canonicalize();
    }
    const hh::RationalBiasVector rp(p);
    auto rep = hh::theorem_dispatch(hh::to_double(rp), r);
    if (!rep.claims_p1()) continue;
    ++claimed;
    auto oracle = hh::max_measure(n, r, rp);
    EXPECT_LE(oracle.max_value.get_d(), rep.bound_value + 1e-9) << trial;
    EXPECT_EQ(oracle.max_value, rp.max()) << trial;
    // The star at a largest coordinate attains it.
    bool star_found = false;
    for (const auto& fam : oracle.maximizers) star_found = star_found || hh::star_center(fam).has_value();
    EXPECT_TRUE(star_found) << trial;
  }
  EXPECT_GT(claimed, 10);
}

TEST(Convergence, FiniteEpsApproachesClosedForm) {
  const hh::BiasVector p({0.72, 0.7, 0.69});
  const int r = 4;
  std::vector<double> closed{hh::coordinate_eigs(0.72, r).lambda};
  for (int s = 1; s <= r - 2; ++s) closed.push_back(hh::closed_form_link_minimum(p, r, s));
  const double target = hh::fgl_bound(closed);
  double prev = 1e300;
  for (double eps : {1e-4, 1e-5, 1e-6}) {
    auto m = hh::r_wise_measure(p, r, eps);
    std::vector<double> l{hh::operator_spectrum(hh::adjacency_operator(m)).lambda_min()};
    for (int s = 1; s <= r - 2; ++s) l.push_back(hh::link_level_minimum(m, s));
    const double err = std::abs(hh::fgl_bound(l) - target);
    EXPECT_LE(err, prev) << eps;
    prev = err;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(Shifting, StrictForNonStarFamilies) {
  // p_1 >= 2/3 > p_2: every 3-wise intersecting up-closed family not inside
  // the star at coordinate 0 satisfies mu_p(B) < (p_1/p_2) mu_{p'}(B).
  const hh::RationalBiasVector p({hh::Rational(3, 4), hh::Rational(3, 5), hh::Rational(1, 2), hh::Rational(2, 5)});
  const auto star0 = hh::families::star(4, 0);
  int checked = 0;
  for (const auto& fam : hh::enumerate_monotone_r_wise(4, 3)) {
    if (fam.empty()) continue;
    auto cmp = hh::shift_comparison(fam, p);
    if (fam.is_subfamily_of(star0)) {
      EXPECT_LE(cmp.measure, cmp.scaled_shifted);
    } else {
      EXPECT_TRUE(cmp.strict()) << fam.to_hex();
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
  auto eq = hh::shift_comparison(star0, p);
  EXPECT_EQ(eq.measure, eq.scaled_shifted);
}
