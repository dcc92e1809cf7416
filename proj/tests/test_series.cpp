#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trigverify/errors.hpp"
#include "trigverify/exact_seq.hpp"
#include "trigverify/series.hpp"

namespace trigverify::series {
namespace {

TruncatedSeries polynomial(std::vector<Rational> c, std::size_t order) {
  c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

TEST(TruncatedSeries, ArithmeticUsesSmallerOrder) {
  const TruncatedSeries a(std::vector<Rational>{1, 2, 3, 4});
  const TruncatedSeries b(std::vector<Rational>{1, 1});
  const auto sum = a + b;
  EXPECT_EQ(sum.order(), 1u);
  EXPECT_EQ(sum, TruncatedSeries(std::vector<Rational>{2, 3}));
  EXPECT_EQ((a * Rational(1, 2))[3], 2);
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_THROW(TruncatedSeries(std::vector<Rational>{}), std::invalid_argument);
}

TEST(SinSeries, Examples) {
  EXPECT_EQ(sin_t_arcsin_series(1, 7), polynomial({0, 1}, 7));
  EXPECT_EQ(sin_t_arcsin_series(Rational(2, 3), 5)[1], Rational(2, 3));
  EXPECT_EQ(sin_t_arcsin_series(3, 9), polynomial({0, 3, 0, -4}, 9));
}

TEST(CosSeries, Examples) {
  EXPECT_EQ(cos_t_arcsin_series(2, 8), polynomial({1, 0, -2}, 8));
  // sqrt(1 - x^2) = 1 - x^2/2 - x^4/8 - ...
  EXPECT_EQ(cos_t_arcsin_series(1, 4), polynomial({1, 0, Rational(-1, 2), 0, Rational(-1, 8)}, 4));
  EXPECT_EQ(cos_t_arcsin_series(0, 6), polynomial({1}, 6));
}

TEST(Series, MatchFullProductFormula) {
  for (const Rational& t : {Rational(2, 3), Rational(-5, 7), Rational(7, 2), Rational(11)}) {
    const auto s = sin_t_arcsin_series(t, 41);
    const auto c = cos_t_arcsin_series(t, 40);
    for (unsigned n = 0; n <= 20; ++n) {
      ASSERT_EQ(s[2 * n + 1], oracle::sin_coefficient_by_product(t, n)) << t << " " << n;
      ASSERT_EQ(c[2 * n], oracle::cos_coefficient_by_product(t, n)) << t << " " << n;
    }
  }
}

TEST(Series, Parity) {
  const auto s = sin_t_arcsin_series(Rational(2, 3), 60);
  const auto c = cos_t_arcsin_series(Rational(2, 3), 60);
  for (std::size_t i = 0; i <= 60; ++i) {
    if (i % 2 == 0) EXPECT_EQ(s[i], 0) << i;
    else EXPECT_EQ(c[i], 0) << i;
  }
}

TEST(Series, SinCoefficientRecurrence) {
  const Rational t(2, 3);
  const auto s = sin_t_arcsin_series(t, 81);
  for (unsigned n = 0; n + 1 <= 40; ++n) {
    const Rational odd(2 * n + 1);
    ASSERT_EQ(s[2 * n + 3] / s[2 * n + 1], -(t * t - odd * odd) / Rational((2 * n + 2) * (2 * n + 3)));
  }
}

TEST(SCoefficientsViaSeries, Examples) {
  EXPECT_EQ(s_coefficients_via_series(0), std::vector<Rational>{Rational(1, 2)});
  EXPECT_EQ(s_coefficients_via_series(2), (std::vector<Rational>{Rational(1, 2), 5, 231}));
  const auto rows = exact_seq::sequence_table(0, 8);
  const auto s = s_coefficients_via_series(8);
  for (const auto& row : rows) EXPECT_EQ(s[row.index], row.s_value);
}

TEST(SCoefficientsViaSeries, MatchesBinomialDefinitionUpTo200) {
  const auto s = s_coefficients_via_series(200);
  for (unsigned long n = 0; n <= 200; ++n) ASSERT_EQ(s[n], exact_seq::s_binomial_def(n)) << n;
}

TEST(TCoefficientsViaSeries, Examples) {
  EXPECT_EQ(t_coefficients_via_series(1), std::vector<Rational>{1});
  EXPECT_EQ(t_coefficients_via_series(3), (std::vector<Rational>{1, 32, 1792}));
  // The n = 0 term: -16^0 C(0,0) / (0 - 1) = 1.
  EXPECT_EQ(cos_two_thirds_scaled(0)[0], 1);
}

TEST(TCoefficientsViaSeries, MatchesClosedFormUpTo200) {
  const auto t = t_coefficients_via_series(200);
  for (unsigned long n = 1; n <= 200; ++n) ASSERT_EQ(t[n - 1], exact_seq::t_closed_form(n)) << n;
}

TEST(CosTwoThirds, MatchesBinomialFormAndAlternateProduct) {
  // 108^n [x^2n] cos((2/3) arcsin x) = -16^n C(3n,n)/(3n-1), and the
  // intermediate form -(4/9^n) prod_{i=1}^{n-1} (6i+2)(6i-2) 108^n / (2n)!.
  const auto scaled = cos_two_thirds_scaled(60);
  for (unsigned long n = 1; n <= 60; ++n) {
    const Rational binom_form =
        -make_rational(pow_ui(16, n) * exact_seq::binomial(3 * n, n), 3 * Integer(n) - 1);
    ASSERT_EQ(scaled[n], binom_form) << n;
    Rational alt = make_rational(-4, pow_ui(9, n));
    for (unsigned long i = 1; i < n; ++i) alt *= (6 * Integer(i) + 2) * (6 * Integer(i) - 2);
    alt *= Rational(pow_ui(108, n)) / Rational(oracle::factorial(2 * n));
    ASSERT_EQ(scaled[n], alt) << n;
  }
}

TEST(ChebyshevTermination, Examples) {
  EXPECT_TRUE(chebyshev_termination(1, 1));
  EXPECT_TRUE(chebyshev_termination(5, 15));
  EXPECT_EQ(multiple_angle_polynomial(5), polynomial({0, 5, 0, -20, 0, 16}, 5));
  EXPECT_TRUE(chebyshev_termination(4, 12));
  EXPECT_EQ(multiple_angle_polynomial(4), polynomial({1, 0, -8, 0, 8}, 4));
  EXPECT_THROW(chebyshev_termination(0, 4), std::invalid_argument);
  EXPECT_THROW(chebyshev_termination(5, 3), std::invalid_argument);
}

TEST(ChebyshevTermination, MatchesChebyshevRecurrence) {
  for (unsigned t = 1; t <= 15; ++t) {
    ASSERT_TRUE(chebyshev_termination(t, 4 * t)) << t;
    const auto oracle_coeffs = t % 2 ? oracle::sin_multiple_angle(t) : oracle::cos_multiple_angle(t);
    const auto poly = multiple_angle_polynomial(t);
    for (std::size_t i = 0; i <= t; ++i) ASSERT_EQ(poly[i], Rational(oracle_coeffs[i])) << t << " " << i;
  }
}

TEST(ChebyshevTermination, NonIntegerParameterDoesNotTerminate) {
  EXPECT_EQ(sin_t_arcsin_series(Rational(2, 3), 31).degree(), 31);
}

TEST(TruncatedSeries, EvaluateMatchesSinMultipleAngle) {
  const Precision prec(192);
  const auto poly = multiple_angle_polynomial(7);
  for (int k = 1; k <= 20; ++k) {
    const BigFloat theta(Rational(k, 13), prec);
    const BigFloat diff = poly.evaluate(sin(theta)) - sin(theta * 7L);
    EXPECT_LE(abs(diff), pow2(-180, prec)) << k;
  }
}

}  // namespace
}  // namespace trigverify::series
