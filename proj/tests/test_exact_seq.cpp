#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trigverify/errors.hpp"
#include "trigverify/exact_seq.hpp"

namespace trigverify::exact_seq {
namespace {

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(2, 1), 2);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(18, 9), 48620);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, MatchesPascalTriangleUpTo60) {
  const auto rows = oracle::pascal_triangle(60);
  for (unsigned m = 0; m <= 60; ++m) {
    for (unsigned k = 0; k <= m; ++k) ASSERT_EQ(binomial(m, k), rows[m][k]) << m << "," << k;
    EXPECT_EQ(binomial(m, m + 1), 0);
  }
}

TEST(SBinomialDef, Examples) {
  EXPECT_EQ(s_binomial_def(0), Rational(1, 2));
  EXPECT_EQ(s_binomial_def(1), 5);
  EXPECT_EQ(s_binomial_def(2), 231);
  // The defining formula gives 14586 (printed lists sometimes show 14568).
  EXPECT_EQ(s_binomial_def(3), 14586);
  EXPECT_EQ(s_binomial_def(5), 84021990);
}

TEST(SProductFormula, Examples) {
  EXPECT_EQ(s_product_formula(0), Rational(1, 2));
  EXPECT_EQ(s_product_formula(1), 5);
  EXPECT_EQ(s_product_formula(2), 231);
}

TEST(SProductFormula, AgreesWithBinomialDefinitionUpTo200) {
  for (unsigned long n = 0; n <= 200; ++n) ASSERT_EQ(s_product_formula(n), s_binomial_def(n)) << n;
}

TEST(SRatio, MatchesConsecutiveQuotientsUpTo200) {
  Rational prev = s_binomial_def(0);
  for (unsigned long n = 0; n <= 200; ++n) {
    const Rational next = s_binomial_def(n + 1);
    ASSERT_EQ(next / prev, s_ratio(n)) << n;
    prev = next;
  }
}

TEST(TClosedForm, Examples) {
  EXPECT_EQ(t_closed_form(1), 1);
  EXPECT_EQ(t_closed_form(2), 32);
  EXPECT_EQ(t_closed_form(3), 1792);
  EXPECT_EQ(t_closed_form(5), 9371648);
  EXPECT_THROW(t_closed_form(0), std::invalid_argument);
}

TEST(TIntegerIdentity, Examples) {
  EXPECT_EQ(t_integer_identity(1), 1);
  EXPECT_EQ(t_integer_identity(2), 32);
  EXPECT_EQ(t_integer_identity(3), 1792);
}

TEST(TIntegerIdentity, AgreesWithClosedFormUpTo500) {
  for (unsigned long n = 1; n <= 500; ++n) {
    const Integer t = t_closed_form(n);
    ASSERT_EQ(t, t_integer_identity(n)) << n;
    ASSERT_GT(t, 0) << n;
  }
}

TEST(CheckDivisibility, Examples) {
  EXPECT_TRUE(check_divisibility(1));
  EXPECT_TRUE(check_divisibility(2));
  EXPECT_TRUE(check_divisibility(100));
}

TEST(CheckDivisibility, ImpliesIntegralS) {
  for (unsigned long n = 1; n <= 300; ++n) {
    ASSERT_TRUE(check_divisibility(n)) << n;
    ASSERT_TRUE(is_integral(s_binomial_def(n))) << n;
  }
}

TEST(SequenceTable, Examples) {
  const auto rows = sequence_table(1, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (SequenceRecord{1, 5, Integer(1)}));
  EXPECT_EQ(rows[1], (SequenceRecord{2, 231, Integer(32)}));

  const auto zero = sequence_table(0, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].s_value, Rational(1, 2));
  EXPECT_FALSE(zero[0].t_value.has_value());

  EXPECT_EQ(sequence_table(1, 8).size(), 8u);
  EXPECT_THROW(sequence_table(3, 2), std::invalid_argument);
}

TEST(Streams, MatchClosedForms) {
  const auto s = s_sequence(120);
  const auto t = t_sequence(120);
  for (unsigned long n = 1; n <= 120; ++n) {
    ASSERT_EQ(Rational(s[n - 1]), s_binomial_def(n)) << n;
    ASSERT_EQ(t[n - 1], t_closed_form(n)) << n;
  }
}

TEST(Streams, TRatioMatchesStream) {
  IntegerStream stream(IntegerStream::Kind::T);
  for (unsigned long n = 1; n <= 50; ++n) {
    const Integer before = stream.value();
    stream.advance();
    ASSERT_EQ(Rational(stream.value()) / Rational(before), t_ratio(n));
  }
}

}  // namespace
}  // namespace trigverify::exact_seq
