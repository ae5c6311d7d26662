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

#include <functional>
#include <optional>
#include <vector>

#include "hyperhoffman/family.hpp"

namespace hyperhoffman {

/// Exhaustive-search caps on n.
inline constexpr int kOracleMaxN = 5;
inline constexpr int kCrossMaxN2 = 4;
inline constexpr int kCrossMaxN3 = 3;

/// Called with each family's minimal members (increasing mask order).
using AntichainVisitor = std::function<void(std::span<const Mask> antichain)>;

/// Every up-closed family over [n], including the empty family and 2^[n].
std::vector<SubsetFamily> enumerate_monotone(int n);

/// Up-closed families whose minimal members r-wise intersect, as a
/// lexicographic DFS over antichains that drops a branch as soon as some r
/// chosen members have empty intersection. The empty family comes first.
void for_each_monotone_r_wise(int n, int r, const AntichainVisitor& visit);
std::vector<SubsetFamily> enumerate_monotone_r_wise(int n, int r);

/// Up-closed families with |A ∩ B| >= t for all members A, B.
void for_each_monotone_t_intersecting(int n, int t, const AntichainVisitor& visit);
std::vector<SubsetFamily> enumerate_monotone_t_intersecting(int n, int t);

template <Scalar T>
struct OracleResult {
  int n = 0;
  int r = 2;
  std::vector<T> p;
  T max_value{};
  std::vector<SubsetFamily> maximizers;  ///< enumeration order
  bool all_maximizers_are_stars = false;
  std::vector<int> star_centers;  ///< 0-based centers of star maximizers
  std::uint64_t families_enumerated = 0;
};

/// Largest mu_p over r-wise intersecting families on [n]. Ties are exact in
/// rational mode and within 1e-12 otherwise.
template <Scalar T>
OracleResult<T> max_measure(int n, int r, const BasicBiasVector<T>& p);

/// Same search over t-intersecting families (r = 2 in the result).
template <Scalar T>
OracleResult<T> max_measure_t_intersecting(int n, int t, const BasicBiasVector<T>& p);

/// The star centered at the family's single common coordinate, if the family
/// equals a star.
std::optional<int> star_center(const SubsetFamily& family);

/// Whether the family lies inside some star.
bool inside_a_star(const SubsetFamily& family);

template <Scalar T>
struct CrossResult {
  int n = 0;
  int r = 2;
  T max_value{};
  std::vector<std::vector<SubsetFamily>> maximizers;
  /// Some tuple of one repeated star attains the maximum.
  bool identical_stars_attain = false;
  /// Every maximizing tuple is one repeated star.
  bool all_maximizers_identical_stars = false;
  std::uint64_t tuples_enumerated = 0;
};

/// Max of prod_k mu_{p_k}(A_k) over r-tuples of up-closed families with
/// A_1 ∩ ... ∩ A_r nonempty for every choice of members.
template <Scalar T>
CrossResult<T> cross_max(int n, std::span<const BasicBiasVector<T>> ps);

struct CensusRecord {
  SubsetFamily family;
  double measure = 0.0;
  double eps = 0.0;
  double tau = 0.0;
  std::optional<double> tau_bound;  ///< absent outside the stability regime
  double star_distance = 0.0;       ///< min_i mu_p(F symmetric-difference star_i)
  std::optional<double> cp_eps;
  bool inside_star = false;
};

/// Every r-wise intersecting up-closed family with mu_p >= p - eps_max,
/// uniform p, sorted by eps (then enumeration order).
std::vector<CensusRecord> stability_census(int n, int r, double p, double eps_max);

}  // namespace hyperhoffman
