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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperhoffman/family.hpp"
#include "hyperhoffman/numeric.hpp"

namespace hyperhoffman {

std::uint64_t choose(int n, int k);

/// One coordinate's symmetric signed measure on {0,1}^r.
///
/// Storage is by weight class: `at_zeros(z)` is the value on any r-tuple of
/// bits with exactly z zeros (z = 0 is the all-ones tuple). Symmetry holds by
/// construction. Marginals of every arity k <= r are precomputed.
template <Scalar T>
class BasicBaseTensor {
 public:
  /// Raw constructor: no normalization or positivity checks; see `validate`.
  static BasicBaseTensor from_classes(std::vector<T> classes) {
    if (classes.size() < 2) throw RangeError("base tensor needs arity >= 1");
    return BasicBaseTensor(std::move(classes));
  }

  int arity() const { return static_cast<int>(marginals_.back().size()) - 1; }

  const T& at_zeros(int zeros) const { return marginal_at(arity(), zeros); }

  /// Value of the arity-k marginal on a tuple with `zeros` zero entries.
  const T& marginal_at(int k, int zeros) const {
    return marginals_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(zeros));
  }

  /// Weight classes of the arity-k marginal (index = zero count).
  std::span<const T> marginal(int k) const { return marginals_.at(static_cast<std::size_t>(k)); }

  std::span<const T> classes() const { return marginal(arity()); }

  /// Total mass with multinomial multiplicities.
  const T& mass() const { return marginals_[0][0]; }

  /// (mu_1(0), mu_1(1)).
  std::array<T, 2> coordinate_marginal() const { return {marginal_at(1, 1), marginal_at(1, 0)}; }

  /// mu_1(1), the bias of this coordinate.
  const T& bias() const { return marginal_at(1, 0); }

 private:
  explicit BasicBaseTensor(std::vector<T> classes) {
    const int r = static_cast<int>(classes.size()) - 1;
    marginals_.resize(static_cast<std::size_t>(r) + 1);
    marginals_[static_cast<std::size_t>(r)] = std::move(classes);
    for (int k = r - 1; k >= 0; --k) {
      // Sum out the last slot: it is either a one (zero count unchanged) or a
      // zero (zero count + 1).
      const auto& up = marginals_[static_cast<std::size_t>(k) + 1];
      auto& m = marginals_[static_cast<std::size_t>(k)];
      m.resize(static_cast<std::size_t>(k) + 1);
      for (int z = 0; z <= k; ++z) {
        m[static_cast<std::size_t>(z)] = up[static_cast<std::size_t>(z)] + up[static_cast<std::size_t>(z) + 1];
      }
    }
  }

  std::vector<std::vector<T>> marginals_;
};

using BaseTensor = BasicBaseTensor<double>;
using RationalBaseTensor = BasicBaseTensor<Rational>;

/// Throws ValidityError naming the failing weight class unless the tensor has
/// unit mass and a strictly positive (r-1)-marginal.
template <Scalar T>
void validate(const BasicBaseTensor<T>& base) {
  const int r = base.arity();
  if (!nearly_equal(base.mass(), T(1), 1e-12)) {
    throw ValidityError("base tensor mass is " + format_double(to_double(base.mass())) + ", expected 1");
  }
  if (r >= 2) {
    for (int z = 0; z < r; ++z) {
      if (!(base.marginal_at(r - 1, z) > 0)) {
        throw ValidityError("arity-" + std::to_string(r - 1) + " marginal class with " + std::to_string(z) +
                            " zeros is not positive (" + format_double(to_double(base.marginal_at(r - 1, z))) +
                            ")");
      }
    }
  }
}

/// 2-wise base: (0,0) -> 1-2p, (0,1) -> p, (1,1) -> 0. Signed when p > 1/2.
template <Scalar T>
BasicBaseTensor<T> base_2wise(const T& p) {
  if (!(p > 0 && p < 1)) throw RangeError("base_2wise: p must lie in (0,1)");
  return BasicBaseTensor<T>::from_classes({T(0), p, T(1 - 2 * p)});
}

/// 3-wise base: one zero -> p/2, three zeros -> 1 - 3p/2, all else 0.
template <Scalar T>
BasicBaseTensor<T> base_3wise(const T& p) {
  if (!(p > 0 && p < 1)) throw RangeError("base_3wise: p must lie in (0,1)");
  if (!(3 * p < 2)) {
    throw ValidityError("base_3wise: p >= 2/3 makes the (0,0) pair marginal 1 - 3p/2 non-positive");
  }
  T half_p = p / 2;
  return BasicBaseTensor<T>::from_classes({T(0), half_p, T(0), T(1 - 3 * p / 2)});
}

/// Perturbation offsets (delta_1, delta_2) of the r-wise base for a given
/// class-interior value eps; they restore unit mass and the p-biased marginal.
template <Scalar T>
std::pair<T, T> rwise_deltas(int r, const T& eps) {
  const T pow = T(std::uint64_t{1} << (r - 1));
  T d1 = (pow - r) / (r - 1) * eps;
  T d2 = (pow - 1) * (r - 2) / (r - 1) * eps;
  return {d1, d2};
}

/// r-wise base perturbed by eps > 0 so that every link marginal is positive:
/// zero zeros -> 0, one zero -> p/(r-1) - delta_1, 2..r-1 zeros -> eps,
/// r zeros -> 1 - r p/(r-1) - delta_2.
template <Scalar T>
BasicBaseTensor<T> base_rwise(const T& p, int r, const T& eps) {
  if (r < 3) throw RangeError("base_rwise: r must be >= 3");
  if (r > 62) throw RangeError("base_rwise: r too large");
  if (!(p > 0 && p < 1)) throw RangeError("base_rwise: p must lie in (0,1)");
  if (!(eps > 0)) throw RangeError("base_rwise: eps must be > 0");
  auto [d1, d2] = rwise_deltas<T>(r, eps);
  std::vector<T> classes(static_cast<std::size_t>(r) + 1, eps);
  classes[0] = 0;
  classes[1] = p / (r - 1) - d1;
  classes[static_cast<std::size_t>(r)] = 1 - r * p / (r - 1) - d2;
  if (!(classes[1] > 0)) {
    throw ValidityError("base_rwise: class with 1 zero (p/(r-1) - delta_1) is not positive; eps too large");
  }
  if (!(classes[static_cast<std::size_t>(r)] > 0)) {
    throw ValidityError("base_rwise: class with " + std::to_string(r) +
                        " zeros (1 - r p/(r-1) - delta_2) is not positive; eps too large or p >= (r-1)/r");
  }
  auto base = BasicBaseTensor<T>::from_classes(std::move(classes));
  validate(base);
  return base;
}

/// 1e-6 times the largest eps keeping both perturbed classes positive.
double default_epsilon(double p, int r);

enum class ConstructionKind { TwoWise, ThreeWise, RWise, Custom };

std::string to_string(ConstructionKind kind);

/// Product of per-coordinate base tensors: a symmetric signed measure on
/// (2^[n])^r whose value on (S_1, ..., S_r) factorizes over coordinates.
template <Scalar T>
class BasicProductMeasure {
 public:
  /// All bases must share one arity.
  static BasicProductMeasure assemble(std::vector<BasicBaseTensor<T>> bases,
                                      ConstructionKind kind = ConstructionKind::Custom,
                                      std::optional<double> eps = std::nullopt) {
    if (bases.empty()) throw RangeError("assemble: need at least one coordinate");
    const int r = bases.front().arity();
    for (const auto& b : bases) {
      if (b.arity() != r) throw RangeError("assemble: mixed arities");
    }
    return BasicProductMeasure(std::move(bases), kind, eps);
  }

  int n() const { return static_cast<int>(bases_.size()); }
  int arity() const { return bases_.front().arity(); }
  ConstructionKind kind() const { return kind_; }
  std::optional<double> epsilon() const { return eps_; }
  const BasicBaseTensor<T>& base(int i) const { return bases_.at(static_cast<std::size_t>(i)); }

  /// mu_k(S_1, ..., S_k) for k = tuple.size() in [1, r]; k < r evaluates the
  /// marginal.
  T evaluate(std::span<const Mask> tuple) const {
    const int k = static_cast<int>(tuple.size());
    if (k < 1 || k > arity()) throw RangeError("evaluate: tuple length outside [1, r]");
    T value = 1;
    for (int i = 0; i < n(); ++i) {
      int zeros = 0;
      for (Mask s : tuple) zeros += (s >> i & 1) ? 0 : 1;
      value *= bases_[static_cast<std::size_t>(i)].marginal_at(k, zeros);
      if (value == 0) break;
    }
    return value;
  }

  T evaluate(std::initializer_list<Mask> tuple) const {
    return evaluate(std::span<const Mask>(tuple.begin(), tuple.size()));
  }

  /// Bias vector of the 1-marginal.
  BasicBiasVector<T> bias() const {
    std::vector<T> p;
    for (const auto& b : bases_) p.push_back(b.bias());
    return BasicBiasVector<T>(std::move(p));
  }

  T mass() const {
    T m = 1;
    for (const auto& b : bases_) m *= b.mass();
    return m;
  }

  /// mu_{r-1} > 0 everywhere, i.e. every adjacency quotient is defined.
  bool is_weighted_hypergraph() const {
    const int r = arity();
    for (const auto& b : bases_) {
      for (int z = 0; z < r; ++z) {
        if (!(b.marginal_at(r - 1, z) > 0)) return false;
      }
    }
    return true;
  }

 private:
  BasicProductMeasure(std::vector<BasicBaseTensor<T>> bases, ConstructionKind kind, std::optional<double> eps)
      : bases_(std::move(bases)), kind_(kind), eps_(eps) {}

  std::vector<BasicBaseTensor<T>> bases_;
  ConstructionKind kind_;
  std::optional<double> eps_;
};

using ProductMeasure = BasicProductMeasure<double>;
using RationalProductMeasure = BasicProductMeasure<Rational>;

template <Scalar T>
BasicProductMeasure<T> two_wise_measure(const BasicBiasVector<T>& p) {
  std::vector<BasicBaseTensor<T>> bases;
  for (const auto& pi : p.values()) bases.push_back(base_2wise(pi));
  return BasicProductMeasure<T>::assemble(std::move(bases), ConstructionKind::TwoWise);
}

template <Scalar T>
BasicProductMeasure<T> three_wise_measure(const BasicBiasVector<T>& p) {
  std::vector<BasicBaseTensor<T>> bases;
  for (const auto& pi : p.values()) bases.push_back(base_3wise(pi));
  return BasicProductMeasure<T>::assemble(std::move(bases), ConstructionKind::ThreeWise);
}

template <Scalar T>
BasicProductMeasure<T> r_wise_measure(const BasicBiasVector<T>& p, int r, const T& eps) {
  std::vector<BasicBaseTensor<T>> bases;
  for (const auto& pi : p.values()) bases.push_back(base_rwise(pi, r, eps));
  return BasicProductMeasure<T>::assemble(std::move(bases), ConstructionKind::RWise, to_double(eps));
}

// --- adjacency and link operators ------------------------------------------

template <Scalar T>
using Matrix2 = std::array<std::array<T, 2>, 2>;

/// Kronecker-factored operator on R^(2^[n]): entry (x, y) is the product over
/// coordinates i of factor_i[x_i][y_i]. Never materialized densely here.
template <Scalar T>
class BasicAdjacencyOperator {
 public:
  BasicAdjacencyOperator(std::vector<Matrix2<T>> factors, bool closed_form)
      : factors_(std::move(factors)), closed_form_(closed_form) {}

  int n() const { return static_cast<int>(factors_.size()); }
  const Matrix2<T>& factor(int i) const { return factors_.at(static_cast<std::size_t>(i)); }
  std::span<const Matrix2<T>> factors() const { return factors_; }
  /// True for the eps -> 0 limit matrices rather than finite-eps quotients.
  bool closed_form() const { return closed_form_; }

  T entry(Mask x, Mask y) const {
    T v = 1;
    for (int i = 0; i < n(); ++i) v *= factors_[static_cast<std::size_t>(i)][x >> i & 1][y >> i & 1];
    return v;
  }

  /// (T f)(x) = sum_y T_{x,y} f(y), one coordinate at a time.
  std::vector<T> apply(std::span<const T> f) const {
    if (f.size() != (std::size_t{1} << n())) throw DimensionError("apply: vector length is not 2^n");
    std::vector<T> out(f.begin(), f.end());
    for (int i = 0; i < n(); ++i) {
      const auto& m = factors_[static_cast<std::size_t>(i)];
      const Mask bit = Mask{1} << i;
      for (Mask x = 0; x < out.size(); ++x) {
        if (x & bit) continue;
        T f0 = out[x];
        T f1 = out[x | bit];
        out[x] = m[0][0] * f0 + m[0][1] * f1;
        out[x | bit] = m[1][0] * f0 + m[1][1] * f1;
      }
    }
    return out;
  }

 private:
  std::vector<Matrix2<T>> factors_;
  bool closed_form_;
};

using AdjacencyOperator = BasicAdjacencyOperator<double>;
using RationalAdjacencyOperator = BasicAdjacencyOperator<Rational>;

namespace detail {
inline std::vector<int> zero_counts(int n, std::span<const Mask> tuple) {
  std::vector<int> zeros(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (Mask s : tuple) zeros[static_cast<std::size_t>(i)] += (s >> i & 1) ? 0 : 1;
  }
  return zeros;
}
}  // namespace detail

/// Link operator of the measure relative to the vertex tuple S (|S| = s <= r-2):
/// (T_S)_{x,y} = mu_{s+2}(S, x, y) / mu_{s+1}(S, x). An empty S gives the
/// adjacency operator T itself.
template <Scalar T>
BasicAdjacencyOperator<T> link_operator(const BasicProductMeasure<T>& m, std::span<const Mask> link) {
  const int s = static_cast<int>(link.size());
  const int r = m.arity();
  if (s > r - 2) throw RangeError("link_operator: need |S| <= r-2");
  const auto zeros = detail::zero_counts(m.n(), link);
  std::vector<Matrix2<T>> factors;
  for (int i = 0; i < m.n(); ++i) {
    const auto& base = m.base(i);
    const int a = zeros[static_cast<std::size_t>(i)];
    Matrix2<T> f{};
    for (int x = 0; x < 2; ++x) {
      const T& den = base.marginal_at(s + 1, a + (x == 0 ? 1 : 0));
      if (!(den > 0)) {
        throw ValidityError("link_operator: non-positive marginal at coordinate " + std::to_string(i + 1));
      }
      for (int y = 0; y < 2; ++y) {
        f[x][y] = base.marginal_at(s + 2, a + (x == 0 ? 1 : 0) + (y == 0 ? 1 : 0)) / den;
      }
    }
    factors.push_back(f);
  }
  return BasicAdjacencyOperator<T>(std::move(factors), false);
}

template <Scalar T>
BasicAdjacencyOperator<T> adjacency_operator(const BasicProductMeasure<T>& m) {
  return link_operator(m, std::span<const Mask>{});
}

/// mu_{s+1}(S, x) for every x: the weights making T_S self-adjoint.
template <Scalar T>
std::vector<T> link_weights(const BasicProductMeasure<T>& m, std::span<const Mask> link) {
  const int s = static_cast<int>(link.size());
  const auto zeros = detail::zero_counts(m.n(), link);
  std::vector<T> w(std::size_t{1} << m.n());
  for (Mask x = 0; x < w.size(); ++x) {
    T v = 1;
    for (int i = 0; i < m.n(); ++i) {
      v *= m.base(i).marginal_at(s + 1, zeros[static_cast<std::size_t>(i)] + ((x >> i & 1) ? 0 : 1));
    }
    w[x] = v;
  }
  return w;
}

/// The eps -> 0 limit of one coordinate's link factor for the r-wise
/// construction (r = 2 and s = 0 gives the 2-wise adjacency factor), for a
/// link pattern with `zeros` zeros and `ones` ones, s = zeros + ones.
Matrix2<double> closed_form_link_factor(double p, int r, int zeros, int ones);

AdjacencyOperator closed_form_link_operator(const BiasVector& p, int r, std::span<const Mask> link);

/// mu_r vanishes on every r-tuple of members (repetition allowed).
template <Scalar T>
bool is_independent(const SubsetFamily& family, const BasicProductMeasure<T>& m) {
  if (family.n() != m.n()) throw DimensionError("is_independent: ground sets differ");
  const auto members = family.members();
  const int r = m.arity();
  // Which weight classes vanish, per coordinate.
  std::vector<std::vector<char>> vanishes(static_cast<std::size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) {
    for (int z = 0; z <= r; ++z) vanishes[static_cast<std::size_t>(i)].push_back(m.base(i).at_zeros(z) == 0);
  }
  std::vector<Mask> tuple(static_cast<std::size_t>(r));
  // Non-decreasing index tuples cover all multisets; mu_r is symmetric.
  auto rec = [&](auto&& self, int depth, std::size_t start) -> bool {
    if (depth == r) {
      for (int i = 0; i < m.n(); ++i) {
        int zeros = 0;
        for (Mask s : tuple) zeros += (s >> i & 1) ? 0 : 1;
        if (vanishes[static_cast<std::size_t>(i)][static_cast<std::size_t>(zeros)]) return true;
      }
      return false;
    }
    for (std::size_t k = start; k < members.size(); ++k) {
      tuple[static_cast<std::size_t>(depth)] = members[k];
      if (!self(self, depth + 1, k)) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

}  // namespace hyperhoffman
