#include "trigverify/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "trigverify/errors.hpp"

namespace trigverify::series {

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("TruncatedSeries needs >= 1 coefficient");
}

long TruncatedSeries::degree() const {
  for (std::size_t i = coefficients_.size(); i-- > 0;)
    if (coefficients_[i] != 0) return static_cast<long>(i);
  return -1;
}

BigFloat TruncatedSeries::evaluate(const BigFloat& x) const {
  BigFloat acc(x.precision());
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    acc *= x;
    acc += BigFloat(coefficients_[i], x.precision());
  }
  return acc;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("truncated: order exceeds series order");
  return TruncatedSeries(std::vector<Rational>(coefficients_.begin(),
                                               coefficients_.begin() + order + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coefficients_.resize(std::min(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coefficients_.resize(std::min(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& factor) {
  for (auto& c : coefficients_) c *= factor;
  return *this;
}

// Both series are built from the term ratio of consecutive nonzero
// coefficients rather than from the full product at every index.

TruncatedSeries sin_t_arcsin_series(const Rational& t, std::size_t order) {
  std::vector<Rational> c(order + 1);
  if (order >= 1) {
    const Rational t2 = t * t;
    Rational a = t;
    c[1] = a;
    // a_{n+1} / a_n = -(t^2 - (2n+1)^2) / ((2n+2)(2n+3))
    for (std::size_t n = 0; 2 * n + 3 <= order; ++n) {
      const Integer odd = 2 * Integer(n) + 1;
      a *= -(t2 - odd * odd);
      a /= (2 * Integer(n) + 2) * (2 * Integer(n) + 3);
      c[2 * n + 3] = a;
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries cos_t_arcsin_series(const Rational& t, std::size_t order) {
  std::vector<Rational> c(order + 1);
  const Rational t2 = t * t;
  Rational a = 1;
  c[0] = a;
  // a_{n+1} / a_n = -(t^2 - (2n)^2) / ((2n+1)(2n+2))
  for (std::size_t n = 0; 2 * n + 2 <= order; ++n) {
    const Integer even = 2 * Integer(n);
    a *= -(t2 - even * even);
    a /= (2 * Integer(n) + 1) * (2 * Integer(n) + 2);
    c[2 * n + 2] = a;
  }
  return TruncatedSeries(std::move(c));
}

std::vector<Rational> s_coefficients_via_series(std::size_t n_max) {
  const TruncatedSeries s = sin_t_arcsin_series(Rational(2, 3), 2 * n_max + 1);
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  Rational scale(3, 4);
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.push_back(scale * s[2 * n + 1]);
    scale *= 108;
  }
  return out;
}

std::vector<Rational> cos_two_thirds_scaled(std::size_t n_max) {
  const TruncatedSeries c = cos_t_arcsin_series(Rational(2, 3), 2 * n_max);
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  Rational scale = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.push_back(scale * c[2 * n]);
    scale *= 108;
  }
  return out;
}

std::vector<Rational> t_coefficients_via_series(std::size_t n_max) {
  const std::vector<Rational> scaled = cos_two_thirds_scaled(n_max);
  std::vector<Rational> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational t = -scaled[n] / 24;
    if (!is_integral(t)) throw NonInteger("T_" + std::to_string(n) + " via series = " + t.get_str());
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

TruncatedSeries multiple_angle_series(unsigned long t, std::size_t order) {
  const Rational tq(Integer(t), 1);
  return t % 2 == 1 ? sin_t_arcsin_series(tq, order) : cos_t_arcsin_series(tq, order);
}

}  // namespace

bool chebyshev_termination(unsigned long t, std::size_t order) {
  if (t == 0) throw std::invalid_argument("chebyshev_termination: t must be >= 1");
  if (order < t) throw std::invalid_argument("chebyshev_termination: order must be >= t");
  return multiple_angle_series(t, order).degree() == static_cast<long>(t);
}

TruncatedSeries multiple_angle_polynomial(unsigned long t) {
  if (t == 0) throw std::invalid_argument("multiple_angle_polynomial: t must be >= 1");
  return multiple_angle_series(t, t);
}

}  // namespace trigverify::series
