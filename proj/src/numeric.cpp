#include "trigverify/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trigverify/errors.hpp"
#include "trigverify/exact_seq.hpp"
#include "trigverify/quadrature.hpp"

namespace trigverify::numeric {

EvalContext::EvalContext(Precision precision, std::size_t max_terms, TailPolicy tail_policy)
    : precision_(precision), max_terms_(max_terms), tail_policy_(tail_policy) {
  if (precision.bits < 64) throw std::invalid_argument("EvalContext: precision must be >= 64 bits");
  if (max_terms == 0) throw std::invalid_argument("EvalContext: max_terms must be >= 1");
}

namespace {

BigFloat at(const BigFloat& x, Precision prec) {
  BigFloat r(prec);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat envelope(const EvalContext& ctx, double exponent) {
  const Precision p = ctx.precision();
  BigFloat c(p);
  mpfr_set_d(c.get(), kBoundaryEnvelope, MPFR_RNDN);
  const BigFloat n(static_cast<long>(ctx.max_terms()), p);
  BigFloat e(p);
  mpfr_set_d(e.get(), -exponent, MPFR_RNDN);
  return c * pow(n, e);
}

// Rounding slack for a sum of `terms` terms each carrying a handful of
// rounding errors from the ratio recurrence.
BigFloat rounding_allowance(std::size_t terms, const BigFloat& scale) {
  const Precision p = scale.precision();
  return abs(scale) * static_cast<long>(8 * terms + 64) * pow2(-p.bits, p);
}

EvalReport make_report(std::string claim, BigFloat lhs, BigFloat rhs, BigFloat tolerance,
                       std::size_t terms) {
  BigFloat residual = abs(lhs - rhs);
  return EvalReport{std::move(claim), std::move(lhs), std::move(rhs), std::move(residual),
                    std::move(tolerance), terms};
}

// term *= S_{n+1} / S_n, in four rounded steps so no intermediate overflows.
void advance_s_ratio(BigFloat& term, std::size_t n) {
  const long k = static_cast<long>(n);
  term *= 12 * (6 * k + 1);
  term *= 6 * k + 5;
  term /= 2 * k + 2;
  term /= 2 * k + 3;
}

SeriesSum sum_s_core(const BigFloat& x, bool boundary, const EvalContext& ctx) {
  const Precision p = ctx.precision();
  const BigFloat xp = at(x, p);
  const BigFloat r = xp * 108L;
  const BigFloat one(1, p);
  const BigFloat eps = pow2(-p.bits, p);
  const bool adaptive = !boundary && ctx.tail_policy() == TailPolicy::GeometricBound;

  BigFloat term = BigFloat(Rational(1, 2), p);
  BigFloat sum(p);
  BigFloat last(p);
  std::size_t terms = 0;
  while (terms < ctx.max_terms()) {
    sum += term;
    last = term;
    ++terms;
    if (adaptive && last * r / (one - r) <= eps * sum) break;
    advance_s_ratio(term, terms - 1);
    term *= xp;
  }
  if (boundary) return {std::move(sum), envelope(ctx, 0.5), terms};
  BigFloat tail = last * r / (one - r);
  return {std::move(sum), std::move(tail), terms};
}

const Rational kGfBoundary(1, 108);

}  // namespace

SeriesSum sum_S_series(const Rational& x, const EvalContext& ctx) {
  if (x <= 0 || x > kGfBoundary)
    throw DomainError("sum_S_series: x = " + x.get_str() + " outside (0, 1/108]");
  return sum_s_core(BigFloat(x, ctx.precision()), x == kGfBoundary, ctx);
}

SeriesSum sum_S_series(const BigFloat& x, const EvalContext& ctx) {
  if (x.is_nan() || x.sign() <= 0 || x.compare(kGfBoundary) >= 0)
    throw DomainError("sum_S_series: x = " + x.to_string() + " outside (0, 1/108)");
  return sum_s_core(x, false, ctx);
}

BigFloat gf_closed_form(const BigFloat& x) {
  const BigFloat root = sqrt(x * 3L);
  const BigFloat angle = asin(root * 6L) * Rational(2, 3);
  return sin(angle) / (root * 8L);
}

EvalReport verify_gf_identity(const Rational& x, const EvalContext& ctx) {
  if (x <= 0 || x >= kGfBoundary)
    throw DomainError("verify_gf_identity: x = " + x.get_str() + " outside (0, 1/108)");
  return verify_gf_identity(BigFloat(x, ctx.precision()), ctx);
}

EvalReport verify_gf_identity(const BigFloat& x, const EvalContext& ctx) {
  SeriesSum s = sum_S_series(x, ctx);
  BigFloat rhs = gf_closed_form(at(x, ctx.precision()));
  BigFloat tol = s.tail_bound + rounding_allowance(s.terms, max(s.value, rhs));
  return make_report("gf-identity", std::move(s.value), std::move(rhs), std::move(tol), s.terms);
}

EvalReport verify_sum_over_2n3(const EvalContext& ctx) {
  const Precision p = ctx.precision();
  BigFloat term = BigFloat(Rational(1, 2), p);  // S_n / 108^n
  BigFloat sum(p);
  for (std::size_t n = 0; n < ctx.max_terms(); ++n) {
    sum += term / static_cast<long>(2 * n + 3);
    advance_s_ratio(term, n);
    term /= 108L;
  }
  BigFloat rhs = sqrt3(p) * Rational(27, 256);
  BigFloat tol = envelope(ctx, 1.5) + rounding_allowance(ctx.max_terms(), rhs);
  return make_report("sum-2n3", std::move(sum), std::move(rhs), std::move(tol), ctx.max_terms());
}

EvalReport verify_sum_at_boundary(const EvalContext& ctx) {
  const EvalContext fixed(ctx.precision(), ctx.max_terms(), TailPolicy::TermCount);
  SeriesSum s = sum_S_series(kGfBoundary, fixed);
  BigFloat rhs = sqrt3(ctx.precision()) * Rational(3, 8);
  BigFloat tol = s.tail_bound + rounding_allowance(s.terms, rhs);
  return make_report("sum-boundary", std::move(s.value), std::move(rhs), std::move(tol), s.terms);
}

BigFloat conjecture_rhs(const BigFloat& x) {
  const Precision p = x.precision();
  BigFloat u = x * sqrt3(p) * 6L;
  if (u.compare(1) > 0) u = BigFloat(1, p);
  if (u.compare(-1) < 0) u = BigFloat(-1, p);
  return cos(acos(u) * Rational(2, 3)) / 12L;
}

EvalReport verify_conjecture_identity(const Rational& x, const EvalContext& ctx) {
  if (108 * x * x > 1)
    throw DomainError("verify_conjecture_identity: |x| = |" + x.get_str() + "| > 1/(6 sqrt 3)");
  return verify_conjecture_identity(BigFloat(x, ctx.precision()), ctx);
}

EvalReport verify_conjecture_identity(const BigFloat& x_in, const EvalContext& ctx) {
  const Precision p = ctx.precision();
  const BigFloat x = at(x_in, p);
  const BigFloat one(1, p);
  const BigFloat x2 = x * x;
  const BigFloat r = x2 * 108L;
  if (x.is_nan() || r > one + pow2(8 - p.bits, p))
    throw DomainError("verify_conjecture_identity: |x| > 1/(6 sqrt 3)");
  const bool boundary = r >= one - pow2(-p.bits / 2, p);
  const bool adaptive = !boundary && ctx.tail_policy() == TailPolicy::GeometricBound;
  const BigFloat eps = pow2(-p.bits, p);

  exact_seq::IntegerStream s_stream(exact_seq::IntegerStream::Kind::S);
  exact_seq::IntegerStream t_stream(exact_seq::IntegerStream::Kind::T);

  // k = 0: S_0 x + 1/24.
  BigFloat odd_pow = x;   // x^(2k+1)
  BigFloat even_pow = x2; // x^(2k), k >= 1
  BigFloat lhs = x * Rational(1, 2) + BigFloat(Rational(1, 24), p);
  BigFloat last_s = abs(x) * Rational(1, 2);
  BigFloat last_t(p);
  std::size_t terms = 1;

  auto tail_bound = [&] {
    const BigFloat q = r / (one - r);
    BigFloat t_tail = terms >= 2 ? last_t * q : x2 / (one - r);
    return last_s * q + t_tail;
  };

  while (terms < ctx.max_terms()) {
    if (adaptive && tail_bound() <= eps) break;
    if (terms > 1) {
      s_stream.advance();
      t_stream.advance();
    }
    odd_pow *= x2;
    BigFloat s_term = odd_pow * s_stream.value();
    BigFloat t_term = even_pow * t_stream.value();
    lhs += s_term;
    lhs -= t_term;
    last_s = abs(s_term);
    last_t = std::move(t_term);
    even_pow *= x2;
    ++terms;
  }

  BigFloat rhs = conjecture_rhs(x);
  BigFloat tol(p);
  if (boundary) {
    tol = envelope(ctx, 0.5) * (abs(x) + one);
  } else {
    tol = tail_bound();
  }
  tol += rounding_allowance(terms, max(abs(lhs), BigFloat(Rational(1, 12), p)));
  return make_report("conjecture", std::move(lhs), std::move(rhs), std::move(tol), terms);
}

EvalReport verify_prop_trig(const BigFloat& t_in, const BigFloat& x_in, const EvalContext& ctx) {
  const Precision p = ctx.precision();
  const BigFloat t = at(t_in, p);
  const BigFloat x = at(x_in, p);
  if (x.is_nan() || x.compare(1) > 0 || x.compare(-1) < 0)
    throw DomainError("verify_prop_trig: x outside [-1, 1]");
  const BigFloat half_turn = pi(p) * t / 2L;
  const BigFloat s = asin(x) * t;
  BigFloat lhs = sin(half_turn) * sin(s) + cos(half_turn) * cos(s);
  BigFloat rhs = cos(acos(x) * t);
  return make_report("prop-trig", std::move(lhs), std::move(rhs), pow2(8 - p.bits, p), 0);
}

namespace {

// arcsin argument b x, snapped onto +-1 when within a few ulps of it.
BigFloat scaled_argument(const BigFloat& b, const BigFloat& x) {
  const Precision p = x.precision();
  BigFloat u = b * x;
  const BigFloat slack = pow2(8 - p.bits, p);
  if (abs(abs(u) - BigFloat(1, p)) <= slack) u = BigFloat(u.sign(), p);
  return u;
}

}  // namespace

BigFloat integral_integrand(const BigFloat& a, const BigFloat& b, const BigFloat& x) {
  return x * sin(a * asin(scaled_argument(b, x)));
}

BigFloat integral_antiderivative(const BigFloat& a, const BigFloat& b, const BigFloat& x) {
  const Precision p = x.precision();
  const BigFloat theta = asin(scaled_argument(b, x));
  const BigFloat two(2, p);
  const BigFloat lo = a - two;
  const BigFloat hi = a + two;
  return (sin(lo * theta) / lo - sin(hi * theta) / hi) / (b * b * 4L);
}

EvalReport verify_integral_theorem(const BigFloat& a_in, const BigFloat& b_in,
                                   const BigFloat& x1_in, const EvalContext& ctx) {
  const Precision p = ctx.precision();
  const BigFloat a = at(a_in, p);
  const BigFloat b = at(b_in, p);
  const BigFloat x1 = at(x1_in, p);
  if (a.compare(2) == 0 || a.compare(-2) == 0)
    throw SingularParameter("verify_integral_theorem: a = +-2");
  if (b.is_zero()) throw SingularParameter("verify_integral_theorem: b = 0");
  const BigFloat u1 = scaled_argument(b, x1);
  if (u1.is_nan() || u1.compare(1) > 0 || u1.compare(-1) < 0)
    throw DomainError("verify_integral_theorem: |b x1| > 1");

  const BigFloat zero(p);
  BigFloat rhs = integral_antiderivative(a, b, x1) - integral_antiderivative(a, b, zero);

  // Stop short of the arcsin branch point by 2^-(prec/2) in b x.
  BigFloat upper = x1;
  BigFloat omitted(p);
  if (abs(u1).compare(1) == 0) {
    const BigFloat gap = pow2(-p.bits / 2, p) / abs(b);
    upper = x1.sign() > 0 ? x1 - gap : x1 + gap;
    omitted = abs(x1) * gap;  // |integrand| <= |x| on the omitted piece
  }
  const Integrand f = [&](const BigFloat& x) { return integral_integrand(a, b, x); };
  const BigFloat target = pow2(-(p.bits * 3) / 5, p);
  QuadratureResult q = integrate(f, zero, upper, target);

  BigFloat tol = q.error_estimate + omitted + rounding_allowance(q.panels * 20, max(abs(rhs), BigFloat(1, p)));
  return make_report("integral", std::move(q.value), std::move(rhs), std::move(tol), q.panels);
}

BigFloat f_closed_form(const BigFloat& u) {
  const Precision p = u.precision();
  const BigFloat theta = asin(u);
  const BigFloat num = sin(theta * Rational(4, 3)) * Rational(3, 4) -
                       sin(theta * Rational(8, 3)) * Rational(3, 8);
  return num / (sqrt3(p) * 3456L);
}

EvalReport verify_f_value(const EvalContext& ctx) {
  const Precision p = ctx.precision();
  BigFloat lhs = f_closed_form(BigFloat(1, p));
  BigFloat rhs(Rational(1, 6144), p);
  return make_report("f-value", std::move(lhs), std::move(rhs), pow2(16 - p.bits, p), 0);
}

EvalReport verify_f_series(const EvalContext& ctx) {
  const EvalReport sum = verify_sum_over_2n3(ctx);
  const Precision p = ctx.precision();
  const BigFloat scale = sqrt3(p) * 648L;
  BigFloat lhs = sum.lhs / scale;
  BigFloat rhs(Rational(1, 6144), p);
  BigFloat tol = sum.tolerance / scale;
  return make_report("f-series", std::move(lhs), std::move(rhs), std::move(tol), sum.terms_used);
}

BigFloat stirling_gamma(const BigFloat& alpha) {
  if (alpha.is_nan() || alpha.compare(1) <= 0)
    throw DomainError("stirling_gamma: alpha must exceed 1");
  const Precision p = alpha.precision();
  const BigFloat m = alpha - BigFloat(1, p);
  return pow(m / euler_e(p), m) * sqrt(pi(p) * m * 2L);
}

BigFloat stirling_relative_error(unsigned long alpha, Precision prec) {
  if (alpha < 2) throw DomainError("stirling_relative_error: alpha must be >= 2");
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), alpha - 1);
  const BigFloat exact(fact, prec);
  const BigFloat approx = stirling_gamma(BigFloat(static_cast<long>(alpha), prec));
  return abs(approx - exact) / exact;
}

BigFloat radius_estimate(unsigned long n, const EvalContext& ctx) {
  if (n == 0) throw std::invalid_argument("radius_estimate: n must be >= 1");
  const Rational s = exact_seq::s_binomial_def(n);
  return rootn(BigFloat(s, ctx.precision()), n);
}

}  // namespace trigverify::numeric
