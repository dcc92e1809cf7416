#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library routine they are compared against.

#include <cstdint>
#include <vector>

#include "trigverify/bignum.hpp"

namespace trigverify::oracle {

// Rows 0..m_max of Pascal's triangle, built by addition only.
inline std::vector<std::vector<Integer>> pascal_triangle(unsigned m_max) {
  std::vector<std::vector<Integer>> rows(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) {
    rows[m].assign(m + 1, Integer(1));
    for (unsigned k = 1; k < m; ++k) rows[m][k] = rows[m - 1][k - 1] + rows[m - 1][k];
  }
  return rows;
}

inline bool trial_division_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Coefficient of x^(2n+1) in sin(t arcsin x) from the full product.
inline Rational sin_coefficient_by_product(const Rational& t, unsigned n) {
  Rational c = t;
  for (unsigned i = 0; i < n; ++i) c *= t * t - Rational((2 * i + 1) * (2 * i + 1));
  if (n % 2) c = -c;
  return c / Rational(factorial(2 * n + 1));
}

// Coefficient of x^(2n) in cos(t arcsin x) from the full product.
inline Rational cos_coefficient_by_product(const Rational& t, unsigned n) {
  Rational c = 1;
  for (unsigned i = 0; i < n; ++i) c *= t * t - Rational(4 * i * i);
  if (n % 2) c = -c;
  return c / Rational(factorial(2 * n));
}

// Chebyshev T_n as a coefficient vector, from T_{n+1} = 2x T_n - T_{n-1}.
inline std::vector<Integer> chebyshev_t(unsigned n) {
  std::vector<Integer> prev{1}, cur{0, 1};
  if (n == 0) return prev;
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Integer> next(k + 2, Integer(0));
    for (unsigned i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (unsigned i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// sin(t theta) as a polynomial in sin(theta) for odd t:
// sin(t theta) = (-1)^((t-1)/2) T_t(sin theta).
inline std::vector<Integer> sin_multiple_angle(unsigned t) {
  auto c = chebyshev_t(t);
  if (((t - 1) / 2) % 2)
    for (auto& v : c) v = -v;
  return c;
}

// cos(t theta) as a polynomial in sin(theta) for even t:
// cos(t theta) = (-1)^(t/2) T_t(sin theta).
inline std::vector<Integer> cos_multiple_angle(unsigned t) {
  auto c = chebyshev_t(t);
  if ((t / 2) % 2)
    for (auto& v : c) v = -v;
  return c;
}

}  // namespace trigverify::oracle
