#include <gtest/gtest.h>

#include "support.hpp"

using namespace liebax;
using testsupport::rand_int;

TEST(RationalSqrt, PerfectSquares) {
  EXPECT_EQ(rational_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(-1)).has_value());
  EXPECT_EQ(rational_sqrt(Rational(50, 2)), Rational(5));
  EXPECT_EQ(rational_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
}

TEST(SquarefreePart, Examples) {
  auto a = squarefree_part(Rational(8));
  EXPECT_EQ(a.d, 2);
  EXPECT_EQ(a.factor, Rational(2));
  auto b = squarefree_part(Rational(-4));
  EXPECT_EQ(b.d, -1);
  EXPECT_EQ(b.factor, Rational(2));
  auto c = squarefree_part(Rational(9, 16));
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.factor, Rational(3, 4));
  EXPECT_THROW(squarefree_part(Rational(0)), Error);
}

TEST(SquarefreePart, ReconstructsAndAgreesWithSqrt) {
  std::mt19937 rng(testsupport::seed("scalar_field_axioms"));
  for (int t = 0; t < 300; ++t) {
    Rational q(rand_int(rng, -500, 500), rand_int(rng, 1, 60));
    q.canonicalize();
    if (sgn(q) == 0) continue;
    auto s = squarefree_part(q);
    EXPECT_EQ(s.factor * s.factor * s.d, q);
    EXPECT_TRUE(is_squarefree(s.d));
    EXPECT_EQ(rational_sqrt(q).has_value(), s.d == 1) << to_string(q);
  }
}

TEST(ParseRational, FormsAndErrors) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(7)), "7");
}

TEST(QuadInverse, Examples) {
  EXPECT_EQ(quad_inverse(Scalar(1)), Scalar(1));
  EXPECT_EQ(quad_inverse(Scalar(0, 1, -1)), Scalar(0, -1, -1));
  const Scalar z(1, 1, 2);
  const Scalar inv = quad_inverse(z);
  EXPECT_EQ(inv, Scalar(-1, 1, 2));
  // (1 + sqrt2)(-1 + sqrt2) = -1 + 2 = 1, multiplied out by hand
  EXPECT_EQ(z * inv, Scalar(1));
  EXPECT_THROW(quad_inverse(Scalar(0)), Error);
}

TEST(Scalar, FieldAxiomsRandomized) {
  std::mt19937 rng(testsupport::seed("scalar_field_axioms"));
  for (std::int64_t d : {-1, 2, -3, 5}) {
    auto rnd = [&] {
      return Scalar(Rational(rand_int(rng, -9, 9), rand_int(rng, 1, 5)), Rational(rand_int(rng, -9, 9), rand_int(rng, 1, 5)), d);
    };
    for (int t = 0; t < 60; ++t) {
      const Scalar a = rnd(), b = rnd(), c = rnd();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, Scalar(0));
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), Scalar(1));
      }
      EXPECT_EQ(a * a.conjugate(), Scalar(a.norm()));
    }
  }
}

TEST(Scalar, MixingFieldsThrows) {
  EXPECT_THROW(Scalar(0, 1, -1) + Scalar(0, 1, 2), Error);
  EXPECT_NO_THROW(Scalar(0, 1, -1) + Scalar(3));
  EXPECT_THROW(Scalar(1, 1, 4), Error);
  EXPECT_THROW(Scalar(1, 1, 1), Error);
  EXPECT_THROW(Field(8), Error);
}

TEST(Scalar, NormalizesRationalResults) {
  const Scalar i(0, 1, -1);
  EXPECT_TRUE((i * i).is_rational());
  EXPECT_EQ(i * i, Scalar(-1));
  EXPECT_EQ((Scalar(2) * i).to_string(), "2*sqrt(-1)");
}

TEST(SqrtInField, RationalAndQuadratic) {
  EXPECT_EQ(sqrt_in_field(Scalar(4), Field()), Scalar(2));
  EXPECT_FALSE(sqrt_in_field(Scalar(-4), Field()).has_value());
  auto s = sqrt_in_field(Scalar(-4), Field(-1));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s * *s, Scalar(-4));
  // 3 + 2 sqrt2 = (1 + sqrt2)^2
  auto t = sqrt_in_field(Scalar(3, 2, 2), Field(2));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t * *t, Scalar(3, 2, 2));
  EXPECT_FALSE(sqrt_in_field(Scalar(0, 1, -1), Field(-1)).has_value());  // i is not a square in Q(i)
  EXPECT_FALSE(sqrt_in_field(Scalar(3), Field(-1)).has_value());
}
