/*
 * Copyright 2026 The advopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "advopt/bracket.hpp"
#include "advopt/errors.hpp"
#include "advopt/rational.hpp"

using namespace advopt;

TEST(ParseRational, AcceptsExactForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
}

TEST(ParseRational, RejectsFloatsAndJunk) {
  for (const char* bad : {"1.5", "1e3", "", "-", "1/", "/2", "1/0", "+1", " 1", "a"}) {
    EXPECT_THROW(parse_rational(bad), SchemaError) << bad;
  }
}

TEST(ToDecimal, RoundsHalfAwayFromZero) {
  EXPECT_EQ(to_decimal(Rational(1, 3)), "0.333333333333");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666666666667");
  EXPECT_EQ(to_decimal(Rational(-2, 3)), "-0.666666666667");
  EXPECT_EQ(to_decimal(Rational(1, 2), 0), "1");
  EXPECT_EQ(to_decimal(Rational(7)), "7.000000000000");
}

TEST(ExtRational, InfinityIsGreatest) {
  const ExtRational inf = ExtRational::infinity();
  const ExtRational two(Rational(2));
  EXPECT_LT(two, inf);
  EXPECT_EQ(inf, ExtRational::infinity());
  EXPECT_FALSE((inf + Rational(1)).is_finite());
  EXPECT_EQ((two + Rational(1, 2)).value(), Rational(5, 2));
  EXPECT_EQ(min(inf, two), two);
  EXPECT_EQ(to_string(inf), "inf");
}

TEST(Bracket, IntersectKeepsTighterEnds) {
  Bracket a{Rational(0), Rational(2), {"a_lo", {}}, {"a_hi", {}}};
  Bracket b{Rational(1), Rational(3), {"b_lo", {}}, {"b_hi", {}}};
  const auto both = intersect(a, b);
  ASSERT_TRUE(both.has_value());
  EXPECT_EQ(both->lo, Rational(1));
  EXPECT_EQ(both->hi, Rational(2));
  EXPECT_EQ(both->lo_witness.kind, "b_lo");
  EXPECT_EQ(both->hi_witness.kind, "a_hi");
  Bracket c{Rational(5), Rational(6), {}, {}};
  EXPECT_FALSE(intersect(a, c).has_value());
}
