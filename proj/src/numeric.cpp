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


#include "hyperhoffman/numeric.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace hyperhoffman {

namespace {

Rational parse_decimal(std::string_view text) {
  std::string mantissa;
  long exponent = 0;
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      ++i;
      long e = 0;
      auto rest = text.substr(i);
      if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        throw RangeError("malformed exponent in '" + std::string(text) + "'");
      }
      exponent += e;
      i = text.size();
      break;
    } else {
      throw RangeError("malformed number '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw RangeError("malformed number '" + std::string(text) + "'");

  mpz_class num(mantissa, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r;
  if (exponent >= 0) {
    r = Rational(num * scale);
  } else {
    r = Rational(num, scale);
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw RangeError("empty number");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw RangeError("zero denominator in '" + std::string(text) + "'");
  Rational r = num / den;
  r.canonicalize();
  return r;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw RangeError("non-finite value");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return parse_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int popcount(Mask m) { return std::popcount(m); }

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hyperhoffman
