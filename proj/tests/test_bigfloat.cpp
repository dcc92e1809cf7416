#include <gtest/gtest.h>

#include "trigverify/bigfloat.hpp"

namespace trigverify {
namespace {

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("1/20"), Rational(1, 20));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("4/2").get_den(), 1);
}

TEST(ParseRational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/", "/2", "1/0", "0.5", "1/-2", "abc", "1/2/3"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(BigFloat, CarriesItsPrecision) {
  const BigFloat a(Rational(1, 3), Precision(100));
  const BigFloat b(Rational(1, 3), Precision(300));
  EXPECT_EQ(a.precision(), Precision(100));
  EXPECT_EQ((a + b).precision(), Precision(300));
  EXPECT_EQ(sin(b).precision(), Precision(300));
}

TEST(BigFloat, PiMatchesKnownDigits) {
  const BigFloat p = pi(Precision(256));
  EXPECT_EQ(p.to_string(40), "3.141592653589793238462643383279502884197e+00");
}

TEST(BigFloat, RationalComparisonIsExact) {
  const Precision prec(128);
  const BigFloat third(Rational(1, 3), prec);
  // The rounded value of 1/3 is not 1/3.
  EXPECT_NE(third.compare(Rational(1, 3)), 0);
  EXPECT_EQ(BigFloat(Rational(3, 8), prec).compare(Rational(3, 8)), 0);
  EXPECT_LT(BigFloat(Rational(1, 109), prec).compare(Rational(1, 108)), 0);
}

TEST(BigFloat, CopyAndMoveKeepValues) {
  BigFloat a(Rational(5, 7), Precision(200));
  BigFloat b = a;
  BigFloat c = std::move(a);
  EXPECT_EQ(b, c);
  a = c;
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.precision(), Precision(200));
}

TEST(BigFloat, AnnotatedStringNamesPrecision) {
  const BigFloat x(Rational(1, 4), Precision(96));
  EXPECT_EQ(x.to_annotated_string(3), "2.50e-01 [prec=96]");
}

TEST(BigFloat, ElementaryIdentitiesAtHighPrecision) {
  const Precision prec(256);
  const BigFloat x(Rational(3, 10), prec);
  const BigFloat one(1, prec);
  const BigFloat tol = pow2(-250, prec);
  EXPECT_LE(abs(sin(x) * sin(x) + cos(x) * cos(x) - one), tol);
  EXPECT_LE(abs(asin(x) + acos(x) - pi(prec) / 2L), tol);
  EXPECT_LE(abs(sqrt3(prec) * sqrt3(prec) - BigFloat(3, prec)), tol);
  EXPECT_LE(abs(log(euler_e(prec)) - one), tol);
  EXPECT_LE(abs(rootn(BigFloat(1000, prec), 3) - BigFloat(10, prec)), tol * 10L);
}

}  // namespace
}  // namespace trigverify
