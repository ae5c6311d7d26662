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


#include "hyperhoffman/family.hpp"

#include <bit>
#include <sstream>

namespace hyperhoffman {

BiasVector to_double(const RationalBiasVector& p) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(p.n()));
  for (const auto& x : p.values()) v.push_back(x.get_d());
  return BiasVector(std::move(v));
}

SubsetFamily::SubsetFamily(int n) : n_(n) {
  if (n < 0 || n > kMaxFamilyN) {
    throw CapError("SubsetFamily: n must be in [0, " + std::to_string(kMaxFamilyN) + "]");
  }
  words_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0);
}

SubsetFamily SubsetFamily::full(int n) {
  return from_predicate(n, [](Mask) { return true; });
}

SubsetFamily SubsetFamily::from_members(int n, std::span<const Mask> members) {
  SubsetFamily f(n);
  for (Mask a : members) f.set(a, true);
  return f;
}

SubsetFamily SubsetFamily::from_members(int n, std::initializer_list<Mask> members) {
  return from_members(n, std::span<const Mask>(members.begin(), members.size()));
}

SubsetFamily SubsetFamily::from_predicate(int n, const std::function<bool(Mask)>& pred) {
  SubsetFamily f(n);
  for (Mask a = 0; a < f.universe_size(); ++a) {
    if (pred(a)) f.set(a, true);
  }
  return f;
}

void SubsetFamily::check_mask(Mask a) const {
  if (a >= universe_size()) {
    throw RangeError("subset " + format_set(a) + " is not inside [" + std::to_string(n_) + "]");
  }
}

void SubsetFamily::set(Mask a, bool value) {
  check_mask(a);
  auto& w = words_[a / 64];
  const std::uint64_t bit = std::uint64_t{1} << (a % 64);
  w = value ? (w | bit) : (w & ~bit);
}

bool SubsetFamily::contains(Mask a) const {
  check_mask(a);
  return (words_[a / 64] >> (a % 64)) & 1;
}

std::size_t SubsetFamily::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Mask> SubsetFamily::members() const {
  std::vector<Mask> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Mask>(wi * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Mask> SubsetFamily::minimal_members() const {
  std::vector<Mask> out;
  for (Mask a : members()) {
    bool minimal = true;
    if (a != 0) {
      // Walk the proper submasks of a, ending with the empty set.
      for (Mask s = (a - 1) & a;; s = (s - 1) & a) {
        if (contains(s)) {
          minimal = false;
          break;
        }
        if (s == 0) break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

bool SubsetFamily::is_up_closed() const {
  for (Mask a : members()) {
    for (int i = 0; i < n_; ++i) {
      if (!contains(a | (Mask{1} << i))) return false;
    }
  }
  return true;
}

bool SubsetFamily::is_subfamily_of(const SubsetFamily& other) const {
  if (other.n_ != n_) throw DimensionError("is_subfamily_of: ground sets differ");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

SubsetFamily SubsetFamily::with_member(Mask a) const {
  SubsetFamily f = *this;
  f.set(a, true);
  return f;
}

SubsetFamily SubsetFamily::without_member(Mask a) const {
  SubsetFamily f = *this;
  f.set(a, false);
  return f;
}

SubsetFamily SubsetFamily::symmetric_difference(const SubsetFamily& other) const {
  if (other.n_ != n_) throw DimensionError("symmetric_difference: ground sets differ");
  SubsetFamily f = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) f.words_[i] ^= other.words_[i];
  return f;
}

std::string SubsetFamily::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t bits = universe_size();
  const std::uint64_t digits = std::max<std::uint64_t>(1, bits / 4);
  std::string out;
  out.reserve(digits);
  for (std::uint64_t d = digits; d-- > 0;) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      Mask a = d * 4 + b;
      if (a < bits && contains(a)) nibble |= 1u << b;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

SubsetFamily SubsetFamily::from_hex(int n, std::string_view hex) {
  SubsetFamily f(n);
  const std::uint64_t bits = f.universe_size();
  const std::uint64_t digits = std::max<std::uint64_t>(1, bits / 4);
  if (hex.size() != digits) {
    throw RangeError("family hex for n=" + std::to_string(n) + " must have " + std::to_string(digits) +
                     " digits, got " + std::to_string(hex.size()));
  }
  for (std::uint64_t i = 0; i < digits; ++i) {
    char c = hex[hex.size() - 1 - i];
    unsigned nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw RangeError("invalid hex digit in family encoding");
    }
    for (unsigned b = 0; b < 4; ++b) {
      if (!(nibble >> b & 1)) continue;
      Mask a = i * 4 + b;
      if (a >= bits) throw RangeError("family hex sets bits beyond 2^n");
      f.set(a, true);
    }
  }
  return f;
}

std::string format_set(Mask a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; a >> i; ++i) {
    if (!(a >> i & 1)) continue;
    if (!first) os << ',';
    os << i + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

// Depth-first search for at most `remaining` further members whose running
// intersection with `acc` becomes empty.
bool has_empty_intersection(std::span<const Mask> mins, std::size_t start, Mask acc, int remaining) {
  if (acc == 0) return true;
  if (remaining == 0) return false;
  for (std::size_t k = start; k < mins.size(); ++k) {
    if (has_empty_intersection(mins, k + 1, acc & mins[k], remaining - 1)) return true;
  }
  return false;
}

}  // namespace

bool is_r_wise_intersecting(const SubsetFamily& family, int r) {
  if (r < 2) throw RangeError("is_r_wise_intersecting: r must be >= 2");
  // Intersections of supersets contain intersections of the sets, and with
  // repetition allowed an r-tuple uses at most r distinct members.
  const auto mins = up_closure(family).minimal_members();
  return !has_empty_intersection(mins, 0, ~Mask{0}, r);
}

bool is_t_intersecting(const SubsetFamily& family, int t) {
  if (t < 1) throw RangeError("is_t_intersecting: t must be >= 1");
  const auto mins = up_closure(family).minimal_members();
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i; j < mins.size(); ++j) {
      if (popcount(mins[i] & mins[j]) < t) return false;
    }
  }
  return true;
}

SubsetFamily up_closure(const SubsetFamily& family) {
  const int n = family.n();
  std::vector<char> in(family.universe_size(), 0);
  for (Mask a : family.members()) in[a] = 1;
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask a = 0; a < in.size(); ++a) {
      if (!(a & bit) && in[a]) in[a | bit] = 1;
    }
  }
  return SubsetFamily::from_predicate(n, [&](Mask a) { return in[a] != 0; });
}

namespace families {

namespace {
void check_coordinate(int n, int i, const char* what) {
  if (i < 0 || i >= n) {
    throw RangeError(std::string(what) + ": coordinate " + std::to_string(i) + " outside [0, " +
                     std::to_string(n) + ")");
  }
}
}  // namespace

SubsetFamily star(int n, int i) {
  check_coordinate(n, i, "star");
  return SubsetFamily::from_predicate(n, [i](Mask a) { return (a >> i & 1) != 0; });
}

SubsetFamily complement_of_star(int n, int i) {
  check_coordinate(n, i, "complement_of_star");
  return SubsetFamily::from_predicate(n, [i](Mask a) { return (a >> i & 1) == 0; });
}

SubsetFamily majority(int n, int k, int m) {
  if (m < 1 || m > n || k < 0 || k > m) {
    throw RangeError("majority: need 0 <= k <= m <= n, got k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
  const Mask window = (Mask{1} << m) - 1;
  return SubsetFamily::from_predicate(n, [=](Mask a) { return popcount(a & window) >= k; });
}

SubsetFamily brace_daykin(int n) { return majority(n, 3, 4); }

SubsetFamily ak_family(int n, int i) {
  if (i < 0) throw RangeError("ak_family: i must be >= 0");
  return majority(n, i + 2, 2 * i + 2);
}

SubsetFamily a_n(int n) {
  if (n < 3) throw RangeError("a_n: need n >= 3");
  const Mask rest = ((Mask{1} << n) - 1) & ~Mask{1};
  return SubsetFamily::from_predicate(n, [=](Mask a) {
    if (a == rest) return true;
    return (a & 1) && 2 * popcount(a) >= n + 2;
  });
}

SubsetFamily a_prime_n(int n) {
  if (n < 2) throw RangeError("a_prime_n: need n >= 2");
  const Mask rest = ((Mask{1} << n) - 1) & ~Mask{1};
  return SubsetFamily::from_predicate(n, [=](Mask a) {
    if (a == rest) return true;
    return (a & 1) && a != 1;
  });
}

}  // namespace families

}  // namespace hyperhoffman
