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

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "hyperhoffman/fourier.hpp"
#include "hyperhoffman/stability.hpp"

namespace hyperhoffman {

namespace {

// Intersections of up to r-1 chosen members, each tagged with the fewest
// members producing it.
struct RWiseState {
  int r;
  std::vector<std::pair<Mask, int>> inters;

  bool admits(Mask c) const {
    if (c == 0) return false;
    return std::all_of(inters.begin(), inters.end(), [&](const auto& e) { return (e.first & c) != 0; });
  }

  RWiseState with(Mask c) const {
    RWiseState next = *this;
    auto add = [&](Mask m, int k) {
      for (auto& e : next.inters) {
        if (e.first == m) {
          e.second = std::min(e.second, k);
          return;
        }
      }
      next.inters.emplace_back(m, k);
    };
    if (r - 1 >= 1) add(c, 1);
    for (const auto& [m, k] : inters) {
      if (k + 1 <= r - 1) add(m & c, k + 1);
    }
    return next;
  }
};

struct TIntersectingState {
  int t;
  std::vector<Mask> chosen;

  bool admits(Mask c) const {
    if (std::popcount(c) < t) return false;
    return std::all_of(chosen.begin(), chosen.end(), [&](Mask a) { return std::popcount(a & c) >= t; });
  }

  TIntersectingState with(Mask c) const {
    TIntersectingState next = *this;
    next.chosen.push_back(c);
    return next;
  }
};

struct AnyState {
  bool admits(Mask c) const { return c != 0; }
  AnyState with(Mask) const { return *this; }
};

template <class State>
void antichain_dfs(int n, const State& st, std::vector<Mask>& chosen, Mask next, const AntichainVisitor& visit) {
  visit(chosen);
  const Mask end = Mask{1} << n;
  for (Mask c = next; c < end; ++c) {
    // Earlier masks are numerically smaller, so only supersets can clash.
    if (std::any_of(chosen.begin(), chosen.end(), [&](Mask a) { return (a & ~c) == 0; })) continue;
    if (!st.admits(c)) continue;
    chosen.push_back(c);
    antichain_dfs(n, st.with(c), chosen, c + 1, visit);
    chosen.pop_back();
  }
}

template <class State>
void run_dfs(int n, const State& st, const AntichainVisitor& visit) {
  std::vector<Mask> chosen;
  antichain_dfs(n, st, chosen, 1, visit);
}

void check_oracle_n(int n, int cap, const char* who) {
  if (n < 1) throw RangeError(std::string(who) + ": n must be >= 1");
  if (n > cap) throw CapError(std::string(who) + ": n=" + std::to_string(n) + " exceeds the exhaustive cap " + std::to_string(cap));
}

SubsetFamily closure_of(int n, std::span<const Mask> antichain) {
  return up_closure(SubsetFamily::from_members(n, antichain));
}

bool tied(double a, double b) { return std::abs(a - b) <= 1e-12; }
bool tied(const Rational& a, const Rational& b) { return a == b; }

template <Scalar T>
bool greater(const T& a, const T& b) {
  return a > b && !tied(a, b);
}

template <Scalar T>
void check_p(int n, const BasicBiasVector<T>& p) {
  if (p.n() != n) throw DimensionError("oracle: p has n=" + std::to_string(p.n()) + ", expected " + std::to_string(n));
}

template <Scalar T>
OracleResult<T> maximize(int n, int r, const BasicBiasVector<T>& p,
                         const std::function<void(const AntichainVisitor&)>& enumerate) {
  check_p(n, p);
  OracleResult<T> res;
  res.n = n;
  res.r = r;
  res.p.assign(p.values().begin(), p.values().end());
  res.max_value = 0;
  const auto table = mu_table(p);
  bool first = true;
  enumerate([&](std::span<const Mask> antichain) {
    ++res.families_enumerated;
    auto fam = closure_of(n, antichain);
    const T value = measure<T>(table, fam);
    if (first || greater(value, res.max_value)) {
      first = false;
      res.max_value = value;
      res.maximizers.clear();
      res.maximizers.push_back(std::move(fam));
    } else if (tied(value, res.max_value)) {
      res.maximizers.push_back(std::move(fam));
    }
  });
  res.all_maximizers_are_stars = !res.maximizers.empty();
  for (const auto& m : res.maximizers) {
    if (auto c = star_center(m)) {
      res.star_centers.push_back(*c);
    } else {
      res.all_maximizers_are_stars = false;
    }
  }
  return res;
}

}  // namespace

std::vector<SubsetFamily> enumerate_monotone(int n) {
  check_oracle_n(n, kOracleMaxN, "enumerate_monotone");
  std::vector<SubsetFamily> out;
  run_dfs(n, AnyState{}, [&](std::span<const Mask> a) { out.push_back(closure_of(n, a)); });
  out.push_back(SubsetFamily::full(n));
  return out;
}

void for_each_monotone_r_wise(int n, int r, const AntichainVisitor& visit) {
  if (r < 2) throw RangeError("enumerate_monotone_r_wise: r must be >= 2");
  check_oracle_n(n, kOracleMaxN, "enumerate_monotone_r_wise");
  run_dfs(n, RWiseState{r, {}}, visit);
}

std::vector<SubsetFamily> enumerate_monotone_r_wise(int n, int r) {
  std::vector<SubsetFamily> out;
  for_each_monotone_r_wise(n, r, [&](std::span<const Mask> a) { out.push_back(closure_of(n, a)); });
  return out;
}

void for_each_monotone_t_intersecting(int n, int t, const AntichainVisitor& visit) {
  if (t < 1) throw RangeError("enumerate_monotone_t_intersecting: t must be >= 1");
  check_oracle_n(n, kOracleMaxN, "enumerate_monotone_t_intersecting");
  run_dfs(n, TIntersectingState{t, {}}, visit);
}

std::vector<SubsetFamily> enumerate_monotone_t_intersecting(int n, int t) {
  std::vector<SubsetFamily> out;
  for_each_monotone_t_intersecting(n, t, [&](std::span<const Mask> a) { out.push_back(closure_of(n, a)); });
  return out;
}

std::optional<int> star_center(const SubsetFamily& family) {
  const auto mins = family.minimal_members();
  if (mins.size() == 1 && std::has_single_bit(mins[0])) return std::countr_zero(mins[0]);
  return std::nullopt;
}

bool inside_a_star(const SubsetFamily& family) {
  Mask common = family.universe_size() - 1;
  for (Mask a : family.members()) common &= a;
  return common != 0 || family.empty();
}

template <Scalar T>
OracleResult<T> max_measure(int n, int r, const BasicBiasVector<T>& p) {
  check_oracle_n(n, kOracleMaxN, "max_measure");
  return maximize<T>(n, r, p, [&](const AntichainVisitor& v) { for_each_monotone_r_wise(n, r, v); });
}

template <Scalar T>
OracleResult<T> max_measure_t_intersecting(int n, int t, const BasicBiasVector<T>& p) {
  check_oracle_n(n, kOracleMaxN, "max_measure_t_intersecting");
  return maximize<T>(n, 2, p, [&](const AntichainVisitor& v) { for_each_monotone_t_intersecting(n, t, v); });
}

template <Scalar T>
CrossResult<T> cross_max(int n, std::span<const BasicBiasVector<T>> ps) {
  const int r = static_cast<int>(ps.size());
  if (r < 2) throw RangeError("cross_max: need at least two bias vectors");
  if (r == 2) {
    check_oracle_n(n, kCrossMaxN2, "cross_max");
  } else {
    check_oracle_n(n, kCrossMaxN3, "cross_max");
  }
  for (const auto& p : ps) check_p(n, p);

  // Up-closed families without the empty set, as (minimal members, family).
  std::vector<std::vector<Mask>> mins;
  std::vector<SubsetFamily> fams;
  run_dfs(n, AnyState{}, [&](std::span<const Mask> a) {
    mins.emplace_back(a.begin(), a.end());
    fams.push_back(closure_of(n, a));
  });
  std::vector<std::vector<T>> value(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    const auto table = mu_table(ps[static_cast<std::size_t>(k)]);
    for (const auto& f : fams) value[static_cast<std::size_t>(k)].push_back(measure<T>(table, f));
  }

  CrossResult<T> res;
  res.n = n;
  res.r = r;
  res.max_value = 0;
  bool first = true;
  std::vector<std::size_t> pick(static_cast<std::size_t>(r));
  // `inters` holds every intersection of one minimal member from each chosen family.
  auto rec = [&](auto&& self, int depth, const std::vector<Mask>& inters, T product) -> void {
    if (depth == r) {
      ++res.tuples_enumerated;
      if (first || greater(product, res.max_value)) {
        first = false;
        res.max_value = product;
        res.maximizers.clear();
      } else if (!tied(product, res.max_value)) {
        return;
      }
      std::vector<SubsetFamily> tuple;
      for (std::size_t idx : pick) tuple.push_back(fams[idx]);
      res.maximizers.push_back(std::move(tuple));
      return;
    }
    for (std::size_t f = 0; f < fams.size(); ++f) {
      std::vector<Mask> next;
      bool ok = true;
      for (Mask i : inters) {
        for (Mask b : mins[f]) {
          const Mask m = i & b;
          if (m == 0) {
            ok = false;
            break;
          }
          next.push_back(m);
        }
        if (!ok) break;
      }
      if (!ok) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      pick[static_cast<std::size_t>(depth)] = f;
      self(self, depth + 1, next, T(product * value[static_cast<std::size_t>(depth)][f]));
    }
  };
  rec(rec, 0, std::vector<Mask>{(Mask{1} << n) - 1}, T(1));

  res.all_maximizers_identical_stars = !res.maximizers.empty();
  for (const auto& tuple : res.maximizers) {
    const auto c = star_center(tuple.front());
    const bool same = c && std::all_of(tuple.begin(), tuple.end(), [&](const SubsetFamily& f) { return f == tuple.front(); });
    if (same) {
      res.identical_stars_attain = true;
    } else {
      res.all_maximizers_identical_stars = false;
    }
  }
  return res;
}

std::vector<CensusRecord> stability_census(int n, int r, double p, double eps_max) {
  check_oracle_n(n, kOracleMaxN, "stability_census");
  const BiasVector pv = BiasVector::uniform(n, p);
  const Rational p_exact = rational_from_double(p);
  const Rational eps_cap = rational_from_double(eps_max);
  const auto table = mu_table(RationalBiasVector::uniform(n, p_exact));
  const auto table_d = mu_table(pv);
  const bool regime = in_stability_regime(r, p);
  const double cp = regime ? c_p(r, p) : 0.0;

  std::vector<CensusRecord> out;
  for_each_monotone_r_wise(n, r, [&](std::span<const Mask> a) {
    auto fam = closure_of(n, a);
    const Rational mu = measure<Rational>(table, fam);
    const Rational eps = p_exact - mu;
    if (eps > eps_cap) return;
    CensusRecord rec{fam, 0.0, 0.0, 0.0, std::nullopt, 0.0, std::nullopt, false};
    rec.measure = mu.get_d();
    rec.eps = eps.get_d();
    const auto e = expand(fam, pv);
    rec.tau = e.mean() > 0 ? high_degree_mass(e) / e.mean() : 0.0;
    if (regime) {
      rec.tau_bound = tau_bound(r, p, rec.eps);
      rec.cp_eps = cp * rec.eps;
    }
    for (int i = 0; i < n; ++i) {
      const double d = measure<double>(table_d, fam.symmetric_difference(families::star(n, i)));
      if (i == 0 || d < rec.star_distance) rec.star_distance = d;
    }
    rec.inside_star = inside_a_star(fam);
    out.push_back(std::move(rec));
  });
  std::stable_sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) { return a.eps < b.eps; });
  return out;
}

template OracleResult<double> max_measure(int, int, const BiasVector&);
template OracleResult<Rational> max_measure(int, int, const RationalBiasVector&);
template OracleResult<double> max_measure_t_intersecting(int, int, const BiasVector&);
template OracleResult<Rational> max_measure_t_intersecting(int, int, const RationalBiasVector&);
template CrossResult<double> cross_max(int, std::span<const BiasVector>);
template CrossResult<Rational> cross_max(int, std::span<const RationalBiasVector>);

}  // namespace hyperhoffman
