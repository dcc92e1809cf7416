#include "trigverify/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace trigverify {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision().bits, b.precision().bits);
}

template <class Op>
BigFloat unary(const BigFloat& x, Op op) {
  BigFloat r(x.precision());
  op(r.get(), x.get(), kRound);
  return r;
}

}  // namespace

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision prec) : BigFloat(prec) {
  mpfr_set_si(value_, value, kRound);
}

BigFloat::BigFloat(const Integer& value, Precision prec) : BigFloat(prec) {
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

BigFloat::BigFloat(const Rational& value, Precision prec) : BigFloat(prec) {
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::grow_to(mpfr_prec_t bits) {
  if (bits > mpfr_get_prec(value_)) mpfr_prec_round(value_, bits, kRound);
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string BigFloat::to_annotated_string(int digits) const {
  return to_string(digits) + " [prec=" + std::to_string(precision().bits) + "]";
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  grow_to(wider(*this, rhs));
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  grow_to(wider(*this, rhs));
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  grow_to(wider(*this, rhs));
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  grow_to(wider(*this, rhs));
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(const Integer& rhs) {
  mpfr_mul_z(value_, value_, rhs.get_mpz_t(), kRound);
  return *this;
}

BigFloat& BigFloat::operator/=(const Integer& rhs) {
  mpfr_div_z(value_, value_, rhs.get_mpz_t(), kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(const Rational& rhs) {
  mpfr_mul_q(value_, value_, rhs.get_mpq_t(), kRound);
  return *this;
}

BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat asin(const BigFloat& x) { return unary(x, mpfr_asin); }
BigFloat acos(const BigFloat& x) { return unary(x, mpfr_acos); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(Precision(wider(base, exponent)));
  mpfr_pow(r.get(), base.get(), exponent.get(), kRound);
  return r;
}

BigFloat rootn(const BigFloat& x, unsigned long n) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), n, kRound);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, kRound);
  return r;
}

const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), kRound);
  return r;
}

BigFloat euler_e(Precision prec) { return exp(BigFloat(1, prec)); }

BigFloat sqrt3(Precision prec) { return sqrt(BigFloat(3, prec)); }

BigFloat pow2(long e, Precision prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.get(), 1, e, kRound);
  return r;
}

}  // namespace trigverify
