#pragma once

#include <cstddef>
#include <string>

#include "trigverify/bigfloat.hpp"
#include "trigverify/bignum.hpp"

namespace trigverify::numeric {

enum class TailPolicy {
  // Stop as soon as the geometric tail bound drops below 2^-precision
  // relative to the running sum (capped at max_terms).
  GeometricBound,
  // Always sum exactly max_terms terms.
  TermCount,
};

class EvalContext {
 public:
  // Throws std::invalid_argument if precision < 64 bits or max_terms == 0.
  EvalContext(Precision precision, std::size_t max_terms,
              TailPolicy tail_policy = TailPolicy::GeometricBound);

  Precision precision() const { return precision_; }
  std::size_t max_terms() const { return max_terms_; }
  TailPolicy tail_policy() const { return tail_policy_; }

  EvalContext with_precision(Precision p) const { return {p, max_terms_, tail_policy_}; }
  EvalContext with_terms(std::size_t n) const { return {precision_, n, tail_policy_}; }

 private:
  Precision precision_;
  std::size_t max_terms_;
  TailPolicy tail_policy_;
};

struct EvalReport {
  std::string claim_id;
  BigFloat lhs;
  BigFloat rhs;
  BigFloat residual;  // |lhs - rhs|
  BigFloat tolerance;
  std::size_t terms_used;

  bool pass() const { return !residual.is_nan() && residual <= tolerance; }
};

// Envelope constant c for the boundary tails c / sqrt(N) and c / N^(3/2).
// The asymptotic constants are 1/(4 sqrt(pi)) ~ 0.141 and ~0.0235.
inline constexpr double kBoundaryEnvelope = 0.2;

struct SeriesSum {
  BigFloat value;
  BigFloat tail_bound;
  std::size_t terms;
};

// Partial sum of sum_n S_n x^n for 0 < x <= 1/108. Interior points get a
// geometric tail bound; x = 1/108 gets the kBoundaryEnvelope / sqrt(N)
// envelope and always uses max_terms terms. Throws DomainError.
SeriesSum sum_S_series(const Rational& x, const EvalContext& ctx);
// Floating argument; the boundary is never hit exactly, so x must satisfy
// 0 < x < 1/108.
SeriesSum sum_S_series(const BigFloat& x, const EvalContext& ctx);

// sin((2/3) arcsin(6 sqrt(3x))) / (8 sqrt(3x)).
BigFloat gf_closed_form(const BigFloat& x);

// Series vs closed form for 0 < x < 1/108. Throws DomainError.
EvalReport verify_gf_identity(const Rational& x, const EvalContext& ctx);
EvalReport verify_gf_identity(const BigFloat& x, const EvalContext& ctx);

// sum_{n < max_terms} S_n / ((2n+3) 108^n) vs 27 sqrt(3) / 256.
EvalReport verify_sum_over_2n3(const EvalContext& ctx);

// sum_{n < max_terms} S_n / 108^n vs 3 sqrt(3) / 8.
EvalReport verify_sum_at_boundary(const EvalContext& ctx);

// cos((2/3) arccos(6 sqrt(3) x)) / 12.
BigFloat conjecture_rhs(const BigFloat& x);

// sum_k S_k x^(2k+1) + 1/24 - sum_{k>=1} T_k x^(2k) vs conjecture_rhs(x)
// for |x| <= 1/(6 sqrt 3). Uses exact S_k, T_k. Near the boundary
// (108 x^2 within 2^-(prec/2) of 1) the tolerance is the power-law
// envelope; elsewhere it is the geometric tail bound. Throws DomainError.
EvalReport verify_conjecture_identity(const Rational& x, const EvalContext& ctx);
EvalReport verify_conjecture_identity(const BigFloat& x, const EvalContext& ctx);

// sin(pi t/2) sin(t arcsin x) + cos(pi t/2) cos(t arcsin x) vs
// cos(t arccos x), tolerance 2^(8 - precision). Throws DomainError.
EvalReport verify_prop_trig(const BigFloat& t, const BigFloat& x, const EvalContext& ctx);

// x sin(a arcsin(b x)).
BigFloat integral_integrand(const BigFloat& a, const BigFloat& b, const BigFloat& x);
// [sin((a-2) arcsin(bx))/(a-2) - sin((a+2) arcsin(bx))/(a+2)] / (4 b^2).
BigFloat integral_antiderivative(const BigFloat& a, const BigFloat& b, const BigFloat& x);

// Quadrature of the integrand over [0, x1] vs F(x1) - F(0).
// Throws SingularParameter for a = +-2 or b = 0, DomainError for |b x1| > 1.
EvalReport verify_integral_theorem(const BigFloat& a, const BigFloat& b, const BigFloat& x1,
                                   const EvalContext& ctx);

// [3/4 sin((4/3) arcsin u) - 3/8 sin((8/3) arcsin u)] / (3456 sqrt 3)
// with u = 6 sqrt(3) x.
BigFloat f_closed_form(const BigFloat& u);

// f_closed_form at u = 1 vs 1/6144; tolerance 2^(16 - precision).
EvalReport verify_f_value(const EvalContext& ctx);
// (1 / (648 sqrt 3)) sum_{n < max_terms} S_n / ((2n+3) 108^n) vs 1/6144,
// with the N^(-3/2) envelope.
EvalReport verify_f_series(const EvalContext& ctx);

// ((alpha-1)/e)^(alpha-1) sqrt(2 pi (alpha-1)) at the precision of alpha.
// Throws DomainError for alpha <= 1.
BigFloat stirling_gamma(const BigFloat& alpha);
// |stirling_gamma(alpha) - (alpha-1)!| / (alpha-1)! for integer alpha >= 2.
BigFloat stirling_relative_error(unsigned long alpha, Precision prec);

// S_n^(1/n), n >= 1.
BigFloat radius_estimate(unsigned long n, const EvalContext& ctx);

}  // namespace trigverify::numeric
