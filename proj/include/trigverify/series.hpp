#pragma once

#include <cstddef>
#include <vector>

#include "trigverify/bigfloat.hpp"
#include "trigverify/bignum.hpp"

// Exact truncated power series for sin(t arcsin x) and cos(t arcsin x),
// and extraction of S_n and T_n from their coefficients.
namespace trigverify::series {

// c_0 + c_1 x + ... + c_N x^N with exact rational coefficients.
class TruncatedSeries {
 public:
  // Zero series of order N.
  explicit TruncatedSeries(std::size_t order);
  // Throws std::invalid_argument if `coefficients` is empty.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  // Index of the highest nonzero coefficient, or -1 for the zero series.
  long degree() const;

  // Horner evaluation at the precision of `x`.
  BigFloat evaluate(const BigFloat& x) const;

  // Same series at a lower order (drops coefficients above `order`).
  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& factor);

  // Binary ops keep the smaller of the two orders.
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& k) { return a *= k; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

// sin(t arcsin x) to order N. Coefficient of x^(2n+1):
//   (-1)^n t prod_{i<n} (t^2 - (2i+1)^2) / (2n+1)!
TruncatedSeries sin_t_arcsin_series(const Rational& t, std::size_t order);

// cos(t arcsin x) to order N. Coefficient of x^(2n):
//   (-1)^n prod_{i<n} (t^2 - (2i)^2) / (2n)!
TruncatedSeries cos_t_arcsin_series(const Rational& t, std::size_t order);

// S_0..S_N read off sin((2/3) arcsin x): S_n = (3/4) 108^n [x^(2n+1)].
std::vector<Rational> s_coefficients_via_series(std::size_t n_max);

// T_1..T_N read off cos((2/3) arcsin x): T_n = -108^n [x^(2n)] / 24.
// Throws NonInteger if any value fails to be an integer.
std::vector<Rational> t_coefficients_via_series(std::size_t n_max);

// 108^n [x^(2n)] cos((2/3) arcsin x) for n = 0..N; equals
// -16^n C(3n,n) / (3n-1).
std::vector<Rational> cos_two_thirds_scaled(std::size_t n_max);

// For odd t, sin(t arcsin x) truncated at order N; for even t, the cos
// series. True iff the series is a polynomial of degree exactly t with
// every coefficient above t equal to zero. Requires t >= 1 and N >= t.
bool chebyshev_termination(unsigned long t, std::size_t order);

// The terminated series for integer t >= 1 (sin for odd t, cos for even t),
// truncated at order t.
TruncatedSeries multiple_angle_polynomial(unsigned long t);

}  // namespace trigverify::series
