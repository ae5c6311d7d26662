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

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperhoffman {

/// Exact arithmetic mode. All measure-valued routines are instantiated for
/// both `double` and `Rational`.
using Rational = mpq_class;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

/// Subsets of [n] are n-bit masks: element k of [n] is bit k-1.
using Mask = std::uint64_t;

/// Absolute tolerance for floating-point comparisons.
inline constexpr double kTolerance = 1e-9;

// Errors. Everything in the library reports failures by throwing one of these.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched ground-set sizes between arguments.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the range where an operation is defined.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A measure fails a positivity or normalization requirement.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Enumeration requested above its exhaustive-search cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

/// Parses "0.45", "9/20", "3", "1e-3" or "-2.5e2" into an exact rational.
Rational parse_rational(std::string_view text);

/// Rational equal to the shortest round-trip decimal form of `x`
/// (so 0.1 maps to 1/10, not to the binary expansion).
Rational rational_from_double(double x);

std::string to_string(const Rational& x);

/// Formats with 17 significant digits.
std::string format_double(double x);

template <Scalar T>
T from_rational(const Rational& x) {
  if constexpr (std::same_as<T, double>) {
    return x.get_d();
  } else {
    return x;
  }
}

/// Equality with `kTolerance` for doubles, exact for rationals.
inline bool nearly_equal(double a, double b, double tol = kTolerance) {
  return (a > b ? a - b : b - a) <= tol;
}
inline bool nearly_equal(const Rational& a, const Rational& b, double = 0) { return a == b; }

int popcount(Mask m);

double binomial(int n, int k);

}  // namespace hyperhoffman
