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


#include "hyperhoffman/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace hyperhoffman {

namespace {

constexpr double kTie = 1e-12;

bool tied(double a, double b) { return std::abs(a - b) <= kTie * std::max(1.0, std::abs(a)); }

// Exact min of prod_{j in S} l_j over all S, by tracking the extreme products.
double exact_min_product(std::span<const double> lambdas) {
  double lo = 1.0, hi = 1.0;
  for (double l : lambdas) {
    const double a = lo * l, b = hi * l;
    lo = std::min({lo, a, b});
    hi = std::max({hi, a, b});
  }
  return lo;
}

}  // namespace

CoordinateEigs coordinate_eigs(double p, int r) {
  if (!(p > 0 && p < 1)) throw RangeError("coordinate_eigs: p must lie in (0,1)");
  if (r < 2) throw RangeError("coordinate_eigs: r must be >= 2");
  const double q = 1.0 - p;
  CoordinateEigs e;
  if (r == 2) {
    e.lambda = -p / q;
    e.in_regime = true;
  } else {
    e.lambda = 1.0 - 1.0 / ((r - 1) * q);
    e.in_regime = p > static_cast<double>(r - 2) / (r - 1);
  }
  return e;
}

double factor_eigenvalue(const Matrix2<double>& m) { return m[0][0] + m[1][1] - 1.0; }

SpectrumReport::SpectrumReport(std::vector<double> coordinate_lambdas) : coord_(std::move(coordinate_lambdas)) {
  const int n = static_cast<int>(coord_.size());
  if (n > 63) throw CapError("product_spectrum: n must be <= 63");

  // Coordinates searched, as indices into coord_.
  std::vector<int> coords(static_cast<std::size_t>(n));
  std::iota(coords.begin(), coords.end(), 0);
  if (n > kFullSpectrumN) {
    restricted_ = true;
    std::stable_sort(coords.begin(), coords.end(), [&](int a, int b) {
      return std::abs(coord_[static_cast<std::size_t>(a)]) > std::abs(coord_[static_cast<std::size_t>(b)]);
    });
    coords.resize(kCandidateCoordinates);
    std::sort(coords.begin(), coords.end());
  }

  const std::size_t k = coords.size();
  std::vector<double> table(std::size_t{1} << k);
  table[0] = 1.0;
  for (std::size_t s = 1; s < table.size(); ++s) {
    const int low = std::countr_zero(s);
    table[s] = table[s & (s - 1)] * coord_[static_cast<std::size_t>(coords[static_cast<std::size_t>(low)])];
  }
  auto to_mask = [&](std::size_t local) {
    Mask m = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if (local >> b & 1) m |= Mask{1} << coords[b];
    }
    return m;
  };

  lambda_min_ = *std::min_element(table.begin(), table.end());
  std::optional<double> second;
  for (double v : table) {
    if (tied(v, lambda_min_)) continue;
    if (!second || v < *second) second = v;
  }
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (tied(table[s], lambda_min_)) {
      argmin_.push_back(to_mask(s));
    } else if (second && tied(table[s], *second)) {
      second_argmin_.push_back(to_mask(s));
    }
  }
  second_min_ = second;
  std::sort(argmin_.begin(), argmin_.end());
  std::sort(second_argmin_.begin(), second_argmin_.end());

  if (restricted_) {
    const double exact = exact_min_product(coord_);
    if (!tied(exact, lambda_min_)) {
      throw Error("product_spectrum: minimum not attained on the extreme coordinates (n=" + std::to_string(n) +
                  "); candidate restriction does not hold for this spectrum");
    }
  }
}

double SpectrumReport::lambda(Mask s) const {
  double v = 1.0;
  for (int i = 0; i < n(); ++i) {
    if (s >> i & 1) v *= coord_[static_cast<std::size_t>(i)];
  }
  return v;
}

SpectrumReport product_spectrum(std::span<const double> coordinate_lambdas) {
  if (coordinate_lambdas.empty()) throw RangeError("product_spectrum: need n >= 1");
  return SpectrumReport(std::vector<double>(coordinate_lambdas.begin(), coordinate_lambdas.end()));
}

SpectrumReport operator_spectrum(const AdjacencyOperator& op) {
  std::vector<double> l;
  for (const auto& f : op.factors()) l.push_back(factor_eigenvalue(f));
  return product_spectrum(l);
}

double link_level_minimum(const ProductMeasure& m, int s) {
  const int r = m.arity();
  if (s < 0 || s > r - 2) throw RangeError("link_level_minimum: need 0 <= s <= r-2");
  double lo = 1.0, hi = 1.0;
  for (int i = 0; i < m.n(); ++i) {
    // One coordinate's options: excluded from S (factor 1) or any link pattern.
    std::vector<double> options{1.0};
    const auto& base = m.base(i);
    for (int a = 0; a <= s; ++a) {
      Matrix2<double> f{};
      for (int x = 0; x < 2; ++x) {
        const double den = base.marginal_at(s + 1, a + (x == 0));
        if (!(den > 0)) throw ValidityError("link_level_minimum: non-positive marginal");
        for (int y = 0; y < 2; ++y) f[x][y] = base.marginal_at(s + 2, a + (x == 0) + (y == 0)) / den;
      }
      options.push_back(factor_eigenvalue(f));
    }
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

TwoWiseMinimum classify_two_wise_minimum(const BiasVector& p) {
  if (!p.is_sorted()) throw RangeError("classify_two_wise_minimum: p must be non-increasing");
  TwoWiseMinimum out;
  auto lam = [&](int i) { return i < p.n() ? -p.p(i) / p.q(i) : 0.0; };
  auto pk = [&](int i) { return i < p.n() ? p.p(i) : 0.0; };
  out.lambda_single = lam(0);
  out.lambda_triple = p.n() >= 3 ? lam(0) * lam(1) * lam(2) : 0.0;

  std::vector<double> l;
  for (int i = 0; i < p.n(); ++i) l.push_back(lam(i));
  const auto spectrum = product_spectrum(l);
  const double p1 = pk(0);
  out.single_is_minimum = std::all_of(spectrum.argmin_sets().begin(), spectrum.argmin_sets().end(), [&](Mask s) {
    return std::has_single_bit(s) && p.p(std::countr_zero(s)) == p1;
  });

  if (!(pk(2) < 0.5)) {
    out.violated = "p_3 < 1/2";
  } else if (!(p1 <= 0.5 || 1.0 - pk(1) > pk(2))) {
    out.violated = "p_1 <= 1/2 or 1 - p_2 > p_3";
  }
  out.claim_regime = out.violated.empty();
  return out;
}

double OnbVector::value(Mask x) const {
  double v = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(set >> i & 1)) continue;
    v *= (x >> i & 1) ? -1.0 / c[i] : c[i];
  }
  return v;
}

std::vector<double> OnbVector::dense() const {
  std::vector<double> out(std::size_t{1} << c.size());
  for (Mask x = 0; x < out.size(); ++x) out[x] = value(x);
  return out;
}

OnbVector onb_vector(Mask s, const BiasVector& p) {
  if (p.n() < 64 && s >> p.n()) throw RangeError("onb_vector: S is not inside [n]");
  OnbVector v;
  v.set = s;
  for (int i = 0; i < p.n(); ++i) v.c.push_back(std::sqrt(p.p(i) / p.q(i)));
  return v;
}

std::vector<std::vector<double>> onb_matrix(const BiasVector& p) {
  if (p.n() > 12) throw CapError("onb_matrix: n must be <= 12");
  const std::size_t dim = std::size_t{1} << p.n();
  std::vector<std::vector<double>> m(dim, std::vector<double>(dim));
  for (Mask s = 0; s < dim; ++s) {
    const auto v = onb_vector(s, p);
    for (Mask x = 0; x < dim; ++x) m[x][s] = v.value(x);
  }
  return m;
}

StarDecomposition star_decomposition(int i, const BiasVector& p) {
  if (i < 0 || i >= p.n()) throw RangeError("star_decomposition: coordinate outside [n]");
  StarDecomposition d{p.p(i), -std::sqrt(p.p(i) * p.q(i))};
  if (p.n() <= kMaxFamilyN) {
    const auto v = onb_vector(Mask{1} << i, p);
    for (Mask x = 0; x < (Mask{1} << p.n()); ++x) {
      const double reconstructed = d.constant + d.coefficient * v.value(x);
      const double expected = (x >> i & 1) ? 1.0 : 0.0;
      if (std::abs(reconstructed - expected) > 1e-12) {
        throw Error("star_decomposition: reconstruction differs from the star indicator at " + format_set(x));
      }
    }
  }
  return d;
}

double weighted_inner(std::span<const double> f, std::span<const double> g, std::span<const double> w) {
  if (f.size() != g.size() || f.size() != w.size()) throw DimensionError("weighted_inner: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i] * w[i];
  return s;
}

Eigen::MatrixXd materialize(const AdjacencyOperator& op) {
  if (op.n() > 12) throw CapError("materialize: n must be <= 12");
  const Eigen::Index dim = Eigen::Index{1} << op.n();
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (Eigen::Index y = 0; y < dim; ++y) m(x, y) = op.entry(static_cast<Mask>(x), static_cast<Mask>(y));
  }
  return m;
}

double dense_lambda_min(const Eigen::MatrixXd& op, std::span<const double> weights) {
  const Eigen::Index dim = op.rows();
  if (op.cols() != dim || static_cast<std::size_t>(dim) != weights.size()) {
    throw DimensionError("dense_lambda_min: operator and weights disagree in size");
  }
  Eigen::VectorXd root(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double w = weights[static_cast<std::size_t>(i)];
    if (!(w > 0)) throw RangeError("dense_lambda_min: weights must be strictly positive");
    root(i) = std::sqrt(w);
  }
  // D^{1/2} T D^{-1/2} is symmetric exactly when T is self-adjoint for <.,.>_w.
  Eigen::MatrixXd sym = root.asDiagonal() * op * root.cwiseInverse().asDiagonal();
  const double asym = (sym - sym.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
  if (asym > 1e-9 * scale) throw RangeError("dense_lambda_min: operator is not self-adjoint for the given weights");
  sym = 0.5 * (sym + sym.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense_lambda_min: eigensolver did not converge");
  return solver.eigenvalues().minCoeff();
}

double dense_lambda_min(const AdjacencyOperator& op, std::span<const double> weights) {
  return dense_lambda_min(materialize(op), weights);
}

}  // namespace hyperhoffman
