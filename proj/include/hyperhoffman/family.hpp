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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperhoffman/numeric.hpp"

namespace hyperhoffman {

/// Family-valued operations allocate 2^n bits.
inline constexpr int kMaxFamilyN = 20;

/// Bias vector p = (p_1, ..., p_n), each strictly inside (0, 1).
///
/// Coordinates are 0-based in code: coordinate i is element i+1 of [n].
/// Sortedness is not enforced; callers that need p_1 >= p_2 >= ... either
/// check `is_sorted()` or work on `sorted()`.
template <Scalar T>
class BasicBiasVector {
 public:
  explicit BasicBiasVector(std::vector<T> p) : p_(std::move(p)) {
    if (p_.empty()) throw RangeError("bias vector must have n >= 1");
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (!(p_[i] > 0 && p_[i] < 1)) {
        throw RangeError("p_" + std::to_string(i + 1) + " must lie in (0,1)");
      }
    }
  }

  static BasicBiasVector uniform(int n, const T& p) {
    if (n < 1) throw RangeError("bias vector must have n >= 1");
    return BasicBiasVector(std::vector<T>(static_cast<std::size_t>(n), p));
  }

  int n() const { return static_cast<int>(p_.size()); }
  const T& p(int i) const { return p_.at(static_cast<std::size_t>(i)); }
  T q(int i) const { return T(1 - p(i)); }
  std::span<const T> values() const { return p_; }

  bool is_sorted() const {
    for (std::size_t i = 1; i < p_.size(); ++i) {
      if (p_[i - 1] < p_[i]) return false;
    }
    return true;
  }

  bool is_uniform() const {
    return std::all_of(p_.begin(), p_.end(), [&](const T& x) { return x == p_.front(); });
  }

  /// Non-increasing copy.
  BasicBiasVector sorted() const {
    std::vector<T> s = p_;
    std::stable_sort(s.begin(), s.end(), [](const T& a, const T& b) { return a > b; });
    return BasicBiasVector(std::move(s));
  }

  /// p_k in 1-based order statistics of the sorted vector, or 0 when k > n.
  T order_stat(int k) const {
    auto s = sorted();
    return k <= n() ? s.p(k - 1) : T(0);
  }

  T max() const { return *std::max_element(p_.begin(), p_.end()); }

  friend bool operator==(const BasicBiasVector&, const BasicBiasVector&) = default;

 private:
  std::vector<T> p_;
};

using BiasVector = BasicBiasVector<double>;
using RationalBiasVector = BasicBiasVector<Rational>;

BiasVector to_double(const RationalBiasVector& p);

/// A family of subsets of [n], stored as a 2^n-bit membership vector.
/// Immutable; the `with_member`/`without_member` helpers return copies.
class SubsetFamily {
 public:
  /// The empty family over [n].
  explicit SubsetFamily(int n);

  static SubsetFamily full(int n);
  static SubsetFamily from_members(int n, std::span<const Mask> members);
  static SubsetFamily from_members(int n, std::initializer_list<Mask> members);
  static SubsetFamily from_predicate(int n, const std::function<bool(Mask)>& pred);

  int n() const { return n_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }

  bool contains(Mask a) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  /// Members in increasing mask order.
  std::vector<Mask> members() const;

  /// Members with no proper subset in the family.
  std::vector<Mask> minimal_members() const;

  bool is_up_closed() const;
  bool is_subfamily_of(const SubsetFamily& other) const;

  SubsetFamily with_member(Mask a) const;
  SubsetFamily without_member(Mask a) const;
  SubsetFamily symmetric_difference(const SubsetFamily& other) const;

  /// Hex encoding of the 2^n-bit membership integer, most significant digit
  /// first, bit A set iff A is a member. Width is max(1, 2^n / 4) digits.
  std::string to_hex() const;
  static SubsetFamily from_hex(int n, std::string_view hex);

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
  friend auto operator<=>(const SubsetFamily& a, const SubsetFamily& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  void check_mask(Mask a) const;
  void set(Mask a, bool value);

  int n_;
  std::vector<std::uint64_t> words_;
};

/// "{1,3}" style rendering with 1-based elements; the empty set is "{}".
std::string format_set(Mask a);

// --- measures --------------------------------------------------------------

/// mu_p(A) = prod_{i in A} p_i * prod_{j notin A} q_j.
template <Scalar T>
T mu_of_set(const BasicBiasVector<T>& p, Mask a) {
  T result = 1;
  for (int i = 0; i < p.n(); ++i) {
    if (a >> i & 1) {
      result *= p.p(i);
    } else {
      result *= p.q(i);
    }
  }
  return result;
}

/// mu_p of every subset of [n], indexed by mask.
template <Scalar T>
std::vector<T> mu_table(const BasicBiasVector<T>& p) {
  if (p.n() > kMaxFamilyN) throw CapError("mu_table: n exceeds family cap");
  std::vector<T> table(std::size_t{1} << p.n());
  table[0] = 1;
  // Extend one coordinate at a time; entries below `bit` hold the measure on
  // the first i coordinates.
  for (int i = 0; i < p.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const T pi = p.p(i);
    const T qi = p.q(i);
    for (Mask a = 0; a < bit; ++a) {
      table[a | bit] = table[a] * pi;
      table[a] = table[a] * qi;
    }
  }
  return table;
}

template <Scalar T>
struct FamilyMeasureResult {
  T value{};
  std::optional<std::map<Mask, T>> per_set_terms;
};

template <Scalar T>
FamilyMeasureResult<T> mu_of_family(const BasicBiasVector<T>& p, const SubsetFamily& family,
                                    bool with_terms = false) {
  if (p.n() != family.n()) {
    throw DimensionError("mu_of_family: bias vector has n=" + std::to_string(p.n()) +
                         " but family has n=" + std::to_string(family.n()));
  }
  FamilyMeasureResult<T> result;
  result.value = 0;
  if (with_terms) result.per_set_terms.emplace();
  for (Mask a : family.members()) {
    T term = mu_of_set(p, a);
    result.value += term;
    if (with_terms) result.per_set_terms->emplace(a, term);
  }
  return result;
}

/// Shorthand for `mu_of_family(p, family).value`.
template <Scalar T>
T measure(const BasicBiasVector<T>& p, const SubsetFamily& family) {
  return mu_of_family(p, family).value;
}

/// Sum of a precomputed `mu_table` over the family's members.
template <Scalar T>
T measure(std::span<const T> table, const SubsetFamily& family) {
  T total = 0;
  for (Mask a : family.members()) total += table[a];
  return total;
}

// --- predicates and closure ------------------------------------------------

/// Every r members (repetition allowed) share an element.
bool is_r_wise_intersecting(const SubsetFamily& family, int r);

/// |A ∩ B| >= t for all members A, B (repetition allowed).
bool is_t_intersecting(const SubsetFamily& family, int t);

SubsetFamily up_closure(const SubsetFamily& family);

// --- named families --------------------------------------------------------

namespace families {

/// All sets containing coordinate i (0-based).
SubsetFamily star(int n, int i);
SubsetFamily complement_of_star(int n, int i);
/// {A : |A ∩ [m]| >= k}.
SubsetFamily majority(int n, int k, int m);
/// majority(3, 4).
SubsetFamily brace_daykin(int n);
/// {G : |G ∩ [2i+2]| >= i+2}.
SubsetFamily ak_family(int n, int i);
/// 3-wise intersecting, not inside any star, measure tending to p:
/// sets containing element 1 of size s with 2s >= n+2, plus [n] minus {1}.
SubsetFamily a_n(int n);
/// 2-wise intersecting: the star at element 1 without {1}, plus [n] minus {1}.
SubsetFamily a_prime_n(int n);

}  // namespace families

}  // namespace hyperhoffman
