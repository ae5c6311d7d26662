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


#include "hyperhoffman/oracle.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "hyperhoffman/stability.hpp"
#include "test_oracles.hpp"

namespace hh = hyperhoffman;
using hh::Mask;
using hh::Rational;

namespace {

hh::RationalBiasVector rp(std::initializer_list<Rational> v) { return hh::RationalBiasVector(std::vector<Rational>(v)); }

std::size_t count_t_intersecting_filter(int n, int t) {
  std::size_t count = 0;
  oracles::for_each_family(n, [&](const std::vector<bool>& in) {
    if (!oracles::up_closed(in, n)) return;
    const auto members = oracles::members_of(in);
    for (Mask a : members) {
      for (Mask b : members) {
        if (hh::popcount(a & b) < t) return;
      }
    }
    ++count;
  });
  return count;
}

}  // namespace

TEST(Enumerate, MonotoneCounts) {
  // Dedekind numbers, counting the empty family and 2^[n].
  EXPECT_EQ(hh::enumerate_monotone(1).size(), 3u);
  EXPECT_EQ(hh::enumerate_monotone(2).size(), 6u);
  EXPECT_EQ(hh::enumerate_monotone(3).size(), 20u);
  EXPECT_EQ(hh::enumerate_monotone(4).size(), 168u);
  for (const auto& f : hh::enumerate_monotone(3)) EXPECT_TRUE(f.is_up_closed());
}

TEST(Enumerate, TwoByTwo) {
  auto fams = hh::enumerate_monotone_r_wise(2, 2);
  ASSERT_EQ(fams.size(), 4u);
  std::set<hh::SubsetFamily> got(fams.begin(), fams.end());
  EXPECT_TRUE(got.count(hh::SubsetFamily(2)));
  EXPECT_TRUE(got.count(hh::SubsetFamily::from_members(2, {0b11})));
  EXPECT_TRUE(got.count(hh::families::star(2, 0)));
  EXPECT_TRUE(got.count(hh::families::star(2, 1)));
}

TEST(Enumerate, MatchesFilterOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 2; r <= 4; ++r) {
      EXPECT_EQ(hh::enumerate_monotone_r_wise(n, r).size(), oracles::count_monotone_r_wise(n, r)) << n << " " << r;
    }
    for (int t = 1; t <= 3; ++t) {
      EXPECT_EQ(hh::enumerate_monotone_t_intersecting(n, t).size(), count_t_intersecting_filter(n, t)) << n << " " << t;
    }
  }
}

TEST(Enumerate, EveryFamilyValidAndDistinct) {
  for (int r = 2; r <= 3; ++r) {
    auto fams = hh::enumerate_monotone_r_wise(5, r);
    std::set<hh::SubsetFamily> seen;
    for (const auto& f : fams) {
      EXPECT_TRUE(f.is_up_closed());
      EXPECT_TRUE(hh::is_r_wise_intersecting(f, r));
      EXPECT_FALSE(f.contains(0));
      EXPECT_TRUE(seen.insert(f).second);
    }
  }
}

TEST(Enumerate, CapsEnforced) {
  EXPECT_THROW(hh::enumerate_monotone_r_wise(6, 2), hh::CapError);
  EXPECT_THROW(hh::enumerate_monotone_r_wise(6, 3), hh::CapError);
  EXPECT_THROW(hh::max_measure(6, 2, hh::BiasVector::uniform(6, 0.3)), hh::CapError);
}

TEST(MaxMeasure, Examples) {
  auto a = hh::max_measure(3, 2, rp({Rational(3, 5), Rational(3, 10), Rational(1, 5)}));
  EXPECT_EQ(a.max_value, Rational(3, 5));
  ASSERT_EQ(a.maximizers.size(), 1u);
  EXPECT_EQ(a.maximizers[0], hh::families::star(3, 0));
  EXPECT_TRUE(a.all_maximizers_are_stars);
  EXPECT_EQ(a.star_centers, (std::vector<int>{0}));

  auto b = hh::max_measure(3, 2, hh::RationalBiasVector::uniform(3, Rational(3, 5)));
  EXPECT_EQ(b.max_value, Rational(81, 125));
  ASSERT_EQ(b.maximizers.size(), 1u);
  EXPECT_EQ(b.maximizers[0], hh::families::majority(3, 2, 3));
  EXPECT_FALSE(b.all_maximizers_are_stars);

  auto c = hh::max_measure(4, 3, hh::RationalBiasVector::uniform(4, Rational(3, 5)));
  EXPECT_EQ(c.max_value, Rational(3, 5));
  EXPECT_EQ(c.maximizers.size(), 4u);
  EXPECT_TRUE(c.all_maximizers_are_stars);
  EXPECT_EQ(c.star_centers, (std::vector<int>{0, 1, 2, 3}));
}

TEST(MaxMeasure, UniquenessInStrictRegime) {
  auto res = hh::max_measure(4, 2, rp({Rational(9, 20), Rational(9, 20), Rational(2, 5), Rational(3, 10)}));
  EXPECT_EQ(res.max_value, Rational(9, 20));
  EXPECT_TRUE(res.all_maximizers_are_stars);
  EXPECT_EQ(res.star_centers, (std::vector<int>{0, 1}));
}

TEST(MaxMeasure, BoundaryCounterexample) {
  // p_1 = p_2 and p_3 = 1/2: a non-star attains p_1.
  auto res = hh::max_measure(3, 2, hh::RationalBiasVector::uniform(3, Rational(1, 2)));
  EXPECT_EQ(res.max_value, Rational(1, 2));
  EXPECT_FALSE(res.all_maximizers_are_stars);
  bool non_star = false;
  for (const auto& f : res.maximizers) non_star = non_star || !hh::star_center(f).has_value();
  EXPECT_TRUE(non_star);
}

TEST(MaxMeasure, DoubleMatchesRational) {
  const auto exact = rp({Rational(7, 10), Rational(1, 2), Rational(2, 5), Rational(1, 5)});
  for (int r = 2; r <= 3; ++r) {
    auto e = hh::max_measure(4, r, exact);
    auto d = hh::max_measure(4, r, hh::to_double(exact));
    EXPECT_NEAR(d.max_value, e.max_value.get_d(), 1e-12);
    EXPECT_EQ(d.maximizers, e.maximizers);
  }
}

TEST(MaxMeasure, Deterministic) {
  const auto p = hh::BiasVector::uniform(5, 0.5);
  auto a = hh::max_measure(5, 3, p);
  auto b = hh::max_measure(5, 3, p);
  EXPECT_EQ(a.maximizers, b.maximizers);
  EXPECT_EQ(a.families_enumerated, b.families_enumerated);
}

TEST(MaxMeasure, TIntersectingMatchesAk) {
  for (Rational p : {Rational(3, 10), Rational(2, 5)}) {
    const int i = hh::ak_band(p);
    auto res = hh::max_measure_t_intersecting(4, 2, hh::RationalBiasVector::uniform(4, p));
    EXPECT_EQ(res.max_value, hh::ak_measure(p, i)) << p.get_str();
  }
}

TEST(StarHelpers, Centers) {
  EXPECT_EQ(hh::star_center(hh::families::star(4, 2)), std::optional<int>(2));
  EXPECT_FALSE(hh::star_center(hh::families::majority(4, 3, 4)).has_value());
  EXPECT_TRUE(hh::inside_a_star(hh::families::star(4, 1).without_member(0b0010)));
  EXPECT_FALSE(hh::inside_a_star(hh::families::brace_daykin(4)));
  EXPECT_FALSE(hh::inside_a_star(hh::SubsetFamily::full(3)));
}

TEST(CrossMax, TwoWiseStars) {
  for (Rational p : {Rational(3, 10), Rational(2, 5)}) {
    std::vector<hh::RationalBiasVector> ps(2, hh::RationalBiasVector::uniform(3, p));
    auto res = hh::cross_max<Rational>(3, ps);
    EXPECT_EQ(res.max_value, p * p);
    EXPECT_TRUE(res.identical_stars_attain);
    EXPECT_TRUE(res.all_maximizers_identical_stars);
    EXPECT_EQ(res.maximizers.size(), 3u);
  }
}

TEST(CrossMax, ThreeWiseReported) {
  std::vector<hh::RationalBiasVector> ps(3, hh::RationalBiasVector::uniform(3, Rational(1, 2)));
  auto res = hh::cross_max<Rational>(3, ps);
  EXPECT_GE(res.max_value, Rational(1, 8));
  EXPECT_TRUE(res.identical_stars_attain);
  EXPECT_GT(res.tuples_enumerated, 0u);
}

TEST(CrossMax, Caps) {
  std::vector<hh::BiasVector> two(2, hh::BiasVector::uniform(5, 0.3));
  EXPECT_THROW(hh::cross_max<double>(5, two), hh::CapError);
  std::vector<hh::BiasVector> three(3, hh::BiasVector::uniform(4, 0.3));
  EXPECT_THROW(hh::cross_max<double>(4, three), hh::CapError);
}

TEST(Census, Examples) {
  auto recs = hh::stability_census(4, 3, 0.6, 0.2);
  ASSERT_FALSE(recs.empty());
  EXPECT_EQ(recs.front().eps, 0.0);
  EXPECT_EQ(recs.front().star_distance, 0.0);
  EXPECT_TRUE(recs.front().inside_star);
  for (std::size_t k = 1; k < recs.size(); ++k) EXPECT_LE(recs[k - 1].eps, recs[k].eps);
  for (const auto& r : recs) {
    ASSERT_TRUE(r.tau_bound.has_value());
    EXPECT_LE(r.tau, *r.tau_bound + 1e-10) << r.family.to_hex();
    EXPECT_LE(r.eps, 0.2 + 1e-15);
  }
}

TEST(Census, BraceDaykinAtHalf) {
  auto recs = hh::stability_census(4, 3, 0.5, 0.5);
  int outside = 0;
  for (const auto& r : recs) {
    EXPECT_FALSE(r.tau_bound.has_value());
    if (!r.inside_star) {
      ++outside;
      EXPECT_LE(r.measure, 5.0 / 16.0 + 1e-15) << r.family.to_hex();
    }
  }
  EXPECT_GT(outside, 0);
}
