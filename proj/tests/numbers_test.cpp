#include <gtest/gtest.h>

#include "kernelcut/numbers.hpp"

using namespace kernelcut;

TEST(Numbers, BitLength) {
  EXPECT_EQ(bit_length(Integer(0)), 0u);
  EXPECT_EQ(bit_length(Integer(1)), 1u);
  EXPECT_EQ(bit_length(Integer(-8)), 4u);
  EXPECT_EQ(bit_length(Rational(3, 4)), 2u + 3u);
}

TEST(Numbers, FloorCeilRound) {
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(ceil_of(Rational(6, 2)), 3);
  EXPECT_EQ(round_of(Rational(5, 2)), 3);
  EXPECT_EQ(round_of(Rational(-5, 2)), -2);
}

TEST(Numbers, CeilLog2) {
  EXPECT_EQ(ceil_log2(Integer(1)), 0u);
  EXPECT_EQ(ceil_log2(Integer(2)), 1u);
  EXPECT_EQ(ceil_log2(Integer(3)), 2u);
  EXPECT_EQ(ceil_log2(Integer(1024)), 10u);
  EXPECT_EQ(ceil_log2(Integer(1025)), 11u);
}

TEST(Numbers, PowersAndGcd) {
  EXPECT_EQ(pow2(70), power(Integer(4), 35));
  EXPECT_EQ(power(Rational(-2, 3), 3), Rational(-8, 27));
  IntegerVector xs{12, -18, 30};
  EXPECT_EQ(gcd_of(xs), 6);
  RationalVector ys{Rational(1, 4), Rational(5, 6), 3};
  EXPECT_EQ(lcm_of_denominators(ys), 12);
  EXPECT_EQ(max_abs(xs), 30);
}

TEST(Numbers, ParseRational) {
  Rational x;
  ASSERT_TRUE(parse_rational("-6/4", x));
  EXPECT_EQ(x, Rational(-3, 2));
  EXPECT_EQ(to_string(x), "-3/2");
  ASSERT_TRUE(parse_rational("+12", x));
  EXPECT_EQ(x, 12);
  EXPECT_FALSE(parse_rational("1/0", x));
  EXPECT_FALSE(parse_rational("1/-2", x));
  EXPECT_FALSE(parse_rational("1.5", x));
  EXPECT_FALSE(parse_rational("", x));
  EXPECT_FALSE(parse_rational("-", x));
  EXPECT_FALSE(parse_rational("/3", x));
}

TEST(Numbers, ParseHugeInteger) {
  Integer x;
  ASSERT_TRUE(parse_integer("123456789012345678901234567890", x));
  EXPECT_EQ(to_string(x), "123456789012345678901234567890");
}
