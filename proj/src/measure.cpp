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


#include "hyperhoffman/measure.hpp"

#include <algorithm>

namespace hyperhoffman {

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

double default_epsilon(double p, int r) {
  if (r < 3) throw RangeError("default_epsilon: r must be >= 3");
  auto [d1, d2] = rwise_deltas<double>(r, 1.0);
  const double low = p / (r - 1) / d1;
  const double high = (1.0 - r * p / (r - 1)) / d2;
  const double margin = std::min(low, high);
  if (!(margin > 0)) throw RangeError("default_epsilon: p outside (0, (r-1)/r)");
  return 1e-6 * margin;
}

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::TwoWise:
      return "2-wise";
    case ConstructionKind::ThreeWise:
      return "3-wise";
    case ConstructionKind::RWise:
      return "r-wise";
    case ConstructionKind::Custom:
      return "custom";
  }
  return "unknown";
}

Matrix2<double> closed_form_link_factor(double p, int r, int zeros, int ones) {
  if (r < 2) throw RangeError("closed_form_link_factor: r must be >= 2");
  if (zeros < 0 || ones < 0 || zeros + ones > r - 2) {
    throw RangeError("closed_form_link_factor: link size must be at most r-2");
  }
  const double q = 1.0 - p;
  if (zeros == 0 && ones == 0) {
    const double a = p / ((r - 1) * q);
    return {{{1.0 - a, a}, {1.0 / (r - 1), 1.0 - 1.0 / (r - 1)}}};
  }
  if (zeros == 0) {
    const double k = r - ones - 1;
    return {{{0.0, 1.0}, {1.0 / k, (k - 1.0) / k}}};
  }
  if (zeros == 1 && ones == 0) return {{{1.0, 0.0}, {0.0, 1.0}}};
  if (zeros == 1) return {{{0.5, 0.5}, {0.0, 1.0}}};
  if (ones == 0) return {{{1.0, 0.0}, {0.5, 0.5}}};
  return {{{0.5, 0.5}, {0.5, 0.5}}};
}

AdjacencyOperator closed_form_link_operator(const BiasVector& p, int r, std::span<const Mask> link) {
  const int s = static_cast<int>(link.size());
  const auto zeros = detail::zero_counts(p.n(), link);
  std::vector<Matrix2<double>> factors;
  for (int i = 0; i < p.n(); ++i) {
    const int a = zeros[static_cast<std::size_t>(i)];
    factors.push_back(closed_form_link_factor(p.p(i), r, a, s - a));
  }
  return AdjacencyOperator(std::move(factors), true);
}

}  // namespace hyperhoffman
