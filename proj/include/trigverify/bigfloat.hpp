#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "trigverify/bignum.hpp"

namespace trigverify {

// Working precision in bits.
struct Precision {
  mpfr_prec_t bits;
  explicit constexpr Precision(mpfr_prec_t b) : bits(b) {}
  friend constexpr bool operator==(Precision, Precision) = default;
};

// Arbitrary-precision binary float, round-to-nearest throughout.
//
// Every value carries the precision it was created with. Binary operations
// produce a result at the larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(Precision prec);
  BigFloat(long value, Precision prec);
  BigFloat(const Integer& value, Precision prec);
  BigFloat(const Rational& value, Precision prec);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const { return Precision(mpfr_get_prec(value_)); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;
  // Value followed by a precision annotation, e.g. "1.5e-3 [prec=256]".
  std::string to_annotated_string(int digits = 20) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);
  BigFloat& operator*=(const Integer& rhs);
  BigFloat& operator/=(const Integer& rhs);
  BigFloat& operator*=(const Rational& rhs);

  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  friend BigFloat operator*(BigFloat lhs, long rhs) { return lhs *= rhs; }
  friend BigFloat operator*(long lhs, BigFloat rhs) { return rhs *= lhs; }
  friend BigFloat operator/(BigFloat lhs, long rhs) { return lhs /= rhs; }
  friend BigFloat operator*(BigFloat lhs, const Rational& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  // Exact comparison against a rational (no rounding of `q`).
  int compare(const Rational& q) const { return mpfr_cmp_q(value_, q.get_mpq_t()); }
  int compare(long v) const { return mpfr_cmp_si(value_, v); }

 private:
  void grow_to(mpfr_prec_t bits);

  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat asin(const BigFloat& x);
BigFloat acos(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat rootn(const BigFloat& x, unsigned long n);
// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
const BigFloat& max(const BigFloat& a, const BigFloat& b);

BigFloat pi(Precision prec);
BigFloat euler_e(Precision prec);
BigFloat sqrt3(Precision prec);
// 2^e at the given precision.
BigFloat pow2(long e, Precision prec);

}  // namespace trigverify
