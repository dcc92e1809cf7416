#include "trigverify/exact_seq.hpp"

#include <stdexcept>
#include <string>

#include "trigverify/errors.hpp"

namespace trigverify::exact_seq {

Integer binomial(unsigned long m, unsigned long k) {
  Integer r;
  if (k > m) return r;
  mpz_bin_uiui(r.get_mpz_t(), m, k);
  return r;
}

Rational s_binomial_def(unsigned long n) {
  const Integer num = binomial(6 * n, 3 * n) * binomial(3 * n, n);
  const Integer den = 2 * (2 * Integer(n) + 1) * binomial(2 * n, n);
  return make_rational(num, den);
}

Rational s_product_formula(unsigned long n) {
  Integer product = pow_ui(12, n);
  for (unsigned long i = 0; i < n; ++i) product *= (6 * Integer(i) + 1) * (6 * Integer(i) + 5);
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), 2 * n + 1);
  return make_rational(product, 2 * fact);
}

Rational s_ratio(unsigned long n) {
  const Integer k(n);
  return make_rational(12 * (6 * k + 1) * (6 * k + 5), (2 * k + 2) * (2 * k + 3));
}

Rational t_ratio(unsigned long n) {
  if (n == 0) throw std::invalid_argument("t_ratio: n must be >= 1");
  const Integer k(n);
  return make_rational(48 * (3 * k - 1) * (3 * k + 1), (2 * k + 1) * (2 * k + 2));
}

Integer t_closed_form(unsigned long n) {
  if (n == 0) throw std::invalid_argument("t_closed_form: n must be >= 1");
  const Rational t = make_rational(pow_ui(16, n) * binomial(3 * n, n), 24 * (3 * Integer(n) - 1));
  if (!is_integral(t))
    throw NonInteger("T_" + std::to_string(n) + " reduces to " + t.get_str());
  return t.get_num();
}

Integer t_integer_identity(unsigned long n) {
  if (n == 0) throw std::invalid_argument("t_integer_identity: n must be >= 1");
  return pow_ui(16, n - 1) * (2 * binomial(3 * n - 2, n - 1) - binomial(3 * n - 2, n));
}

bool check_divisibility(unsigned long n) {
  const Integer num = binomial(6 * n, 3 * n) * binomial(3 * n, n);
  const Integer den = 2 * (2 * Integer(n) + 1) * binomial(2 * n, n);
  return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
}

SequenceRows sequence_table(unsigned long n_min, unsigned long n_max) {
  if (n_min > n_max) throw std::invalid_argument("sequence_table: n_min > n_max");
  SequenceRows rows;
  rows.reserve(n_max - n_min + 1);
  for (unsigned long n = n_min; n <= n_max; ++n) {
    SequenceRecord rec{n, s_binomial_def(n), std::nullopt};
    if (n >= 1) {
      if (!is_integral(rec.s_value))
        throw NonInteger("S_" + std::to_string(n) + " reduces to " + rec.s_value.get_str());
      rec.t_value = t_closed_form(n);
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

IntegerStream::IntegerStream(Kind kind) : kind_(kind), value_(kind == Kind::S ? 5 : 1) {}

void IntegerStream::advance() {
  const Integer k(index_);
  Integer num, den;
  if (kind_ == Kind::S) {
    num = 12 * (6 * k + 1) * (6 * k + 5);
    den = (2 * k + 2) * (2 * k + 3);
  } else {
    num = 48 * (3 * k - 1) * (3 * k + 1);
    den = (2 * k + 1) * (2 * k + 2);
  }
  value_ *= num;
  ++index_;
  if (!mpz_divisible_p(value_.get_mpz_t(), den.get_mpz_t()))
    throw NonInteger(std::string(kind_ == Kind::S ? "S_" : "T_") + std::to_string(index_) +
                     " is not an integer");
  mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), den.get_mpz_t());
}

namespace {

std::vector<Integer> collect(IntegerStream::Kind kind, unsigned long count) {
  std::vector<Integer> out;
  out.reserve(count);
  IntegerStream stream(kind);
  for (unsigned long n = 1; n <= count; ++n) {
    if (n > 1) stream.advance();
    out.push_back(stream.value());
  }
  return out;
}

}  // namespace

std::vector<Integer> s_sequence(unsigned long count) {
  return collect(IntegerStream::Kind::S, count);
}

std::vector<Integer> t_sequence(unsigned long count) {
  return collect(IntegerStream::Kind::T, count);
}

}  // namespace trigverify::exact_seq
