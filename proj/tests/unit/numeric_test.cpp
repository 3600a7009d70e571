#include <gtest/gtest.h>

#include "gcrank/error.hpp"
#include "gcrank/numeric.hpp"
#include "gcrank/random.hpp"

namespace gcrank {
namespace {

TEST(Numeric, RationalsStayInLowestTerms) {
  const Rational r(Integer(6), Integer(-8));
  EXPECT_EQ(numer(r), -3);
  EXPECT_EQ(denom(r), 4);
  EXPECT_EQ(to_string(r), "-3/4");
  EXPECT_EQ(to_string(Rational(10, 5)), "2");
}

TEST(Numeric, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "1/4", "-3/8", "1/123456789012345678901234567890"})
    EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_integer("+12"), 12);
}

TEST(Numeric, ParseRejectsGarbage) {
  for (const char* s : {"", "-", "1.5", "1/0", "a/2", "1/", "/3"})
    EXPECT_THROW(parse_rational(s), Error) << s;
}

TEST(Numeric, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(floor(Rational(4)), 4);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor_div(Integer(-1), Integer(3)), -1);
}

TEST(Numeric, FloorProperty) {
  auto rng = make_rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational r(Integer(uniform_int(rng, -1000, 1000)), Integer(uniform_int(rng, 1, 97)));
    const Integer f = floor(r);
    EXPECT_LE(Rational(f), r);
    EXPECT_GT(Rational(f + 1), r);
  }
}

TEST(Numeric, Norms) {
  const std::vector<Integer> v{Integer(3), Integer(-5), Integer(0), Integer(2)};
  EXPECT_EQ(l1_norm(v), 10);
  EXPECT_EQ(linf_norm(v), 5);
  EXPECT_EQ(sum(v), 0);
  EXPECT_EQ(content(std::vector<Integer>{Integer(6), Integer(-9), Integer(0)}), 3);
  EXPECT_EQ(sum_over(v, {0, 3}), 5);
}

TEST(Numeric, DecimalTruncatesDownward) {
  EXPECT_EQ(to_decimal(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 4), "-0.3334");
  EXPECT_EQ(to_decimal(Rational(5), 2), "5.00");
}

TEST(Numeric, BigValuesAreExact) {
  const Integer big = pow2(200);
  EXPECT_EQ(bit_length(big), 201u);
  EXPECT_EQ(Rational(big + 1, big) - 1, Rational(Integer(1), big));
  EXPECT_FALSE(fits_int64(big));
  EXPECT_THROW(to_int64(big), Error);
}

TEST(Random, GeneratorIsPinned) {
  auto a = make_rng(7);
  auto b = make_rng(7);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a(), b());
  auto c = make_rng(7, 1);
  auto d = make_rng(7);
  EXPECT_NE(c(), d());
}

TEST(Random, UniformIntegerStaysInRange) {
  auto rng = make_rng(3);
  const Integer hi = pow2(80) + 5;
  for (int i = 0; i < 200; ++i) {
    const Integer x = uniform_integer(rng, hi);
    EXPECT_GE(x, 0);
    EXPECT_LE(x, hi);
  }
  std::vector<int> hits(4, 0);
  for (int i = 0; i < 4000; ++i) ++hits[uniform_integer(rng, Integer(3)).convert_to<int>()];
  for (int h : hits) EXPECT_GT(h, 800);
}

}  // namespace
}  // namespace gcrank
