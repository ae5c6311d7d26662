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

#include <gtest/gtest.h>

namespace hh = hyperhoffman;

TEST(ParseRational, Decimal) {
  EXPECT_EQ(hh::parse_rational("0.45"), hh::Rational(9, 20));
  EXPECT_EQ(hh::parse_rational("3"), hh::Rational(3));
  EXPECT_EQ(hh::parse_rational("-2.5e2"), hh::Rational(-250));
  EXPECT_EQ(hh::parse_rational("1e-3"), hh::Rational(1, 1000));
}

TEST(ParseRational, Fraction) {
  EXPECT_EQ(hh::parse_rational("9/20"), hh::Rational(9, 20));
  EXPECT_EQ(hh::parse_rational("6/8"), hh::Rational(3, 4));
}

TEST(ParseRational, RejectsGarbage) {
  EXPECT_THROW(hh::parse_rational(""), hh::Error);
  EXPECT_THROW(hh::parse_rational("abc"), hh::Error);
  EXPECT_THROW(hh::parse_rational("1/0"), hh::Error);
}

TEST(RationalFromDouble, ShortestDecimal) {
  EXPECT_EQ(hh::rational_from_double(0.1), hh::Rational(1, 10));
  EXPECT_EQ(hh::rational_from_double(0.6), hh::Rational(3, 5));
  EXPECT_EQ(hh::rational_from_double(0.5), hh::Rational(1, 2));
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(hh::format_double(0.5), "0.5");
  EXPECT_EQ(hh::format_double(0.1), "0.10000000000000001");
}

TEST(Binomial, SmallValues) {
  EXPECT_DOUBLE_EQ(hh::binomial(4, 2), 6.0);
  EXPECT_DOUBLE_EQ(hh::binomial(5, 0), 1.0);
  EXPECT_DOUBLE_EQ(hh::binomial(3, 4), 0.0);
}
