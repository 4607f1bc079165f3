/*
 * Copyright 2026 The gossip_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gossiplab/rational.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gossiplab/error.hpp"

namespace gossiplab {
namespace {

TEST(Rational, NormalizesToLowestTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(0, 7).den(), 1);
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(5, 7), Rational(-5, 7));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(Rational, Rounding) {
  EXPECT_EQ(Rational(5, 2).round_half_up(), 3);
  EXPECT_EQ(Rational(-5, 2).round_half_up(), -2);
  EXPECT_EQ(Rational(49, 10).round_half_up(), 5);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(30, 13).to_decimal(4), "2.3077");
  EXPECT_EQ(Rational(2, 3).to_decimal(2), "0.67");
  EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.13");
  EXPECT_EQ(Rational(-1, 1000).to_decimal(2), "0.00");
  EXPECT_EQ(Rational(6).to_decimal(0), "6");
  EXPECT_EQ(Rational(1, 200).to_shortest_decimal(), "0.005");
  EXPECT_EQ(Rational(27, 32).to_shortest_decimal(), "0.84375");
  EXPECT_EQ(Rational(1).to_shortest_decimal(), "1");
  EXPECT_EQ(Rational(1, 3).to_shortest_decimal(3), "0.333");
  EXPECT_EQ(Rational(3, 4).to_string(), "3/4");

  std::ostringstream os;
  os << Rational(5, 10);
  EXPECT_EQ(os.str(), "1/2");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse("0.005"), Rational(1, 200));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse(" 2/4 "), Rational(1, 2));
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e-3", "0x10", "1/"}) {
    EXPECT_THROW(Rational::parse(bad), GossipError) << bad;
  }
  try {
    Rational::parse("nope");
  } catch (const GossipError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(Rational, ParseRoundTripsShortestDecimal) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-100000, 100000);
  std::uniform_int_distribution<int> exp2(0, 10);
  std::uniform_int_distribution<int> exp5(0, 6);
  for (int i = 0; i < 500; ++i) {
    std::int64_t den = (std::int64_t{1} << exp2(rng));
    for (int k = exp5(rng); k > 0; --k) den *= 5;
    Rational r(num(rng), den);
    EXPECT_EQ(Rational::parse(r.to_shortest_decimal()), r) << r;
  }
}

TEST(Rational, OverflowIsReported) {
  Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big * Rational(2), std::overflow_error);
  // 128-bit intermediates keep products that reduce back into range exact.
  Rational a(std::numeric_limits<std::int64_t>::max(), 3);
  EXPECT_EQ(a * Rational(3, std::numeric_limits<std::int64_t>::max()), Rational(1));
}

}  // namespace
}  // namespace gossiplab
