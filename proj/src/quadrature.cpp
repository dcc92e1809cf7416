#include "trigverify/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trigverify::numeric {

GaussRule gauss_legendre(unsigned points, Precision prec) {
  if (points == 0) throw std::invalid_argument("gauss_legendre: need at least one point");
  const Precision work(prec.bits + 32);
  const BigFloat eps = pow2(-static_cast<long>(prec.bits) - 8, work);
  GaussRule rule;
  for (unsigned i = 1; i <= points; ++i) {
    const double guess = std::cos(std::numbers::pi * (i - 0.25) / (points + 0.5));
    BigFloat x(work);
    mpfr_set_d(x.get(), guess, MPFR_RNDN);
    BigFloat dp(work);
    for (int iter = 0; iter < 200; ++iter) {
      BigFloat p0(1, work);
      BigFloat p1 = x;
      for (unsigned k = 1; k < points; ++k) {
        BigFloat p2 = (x * p1 * static_cast<long>(2 * k + 1) - p0 * static_cast<long>(k)) /
                      static_cast<long>(k + 1);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = (x * p1 - p0) * static_cast<long>(points) / (x * x - BigFloat(1, work));
      const BigFloat dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= eps) break;
    }
    const BigFloat w = BigFloat(2, work) / ((BigFloat(1, work) - x * x) * dp * dp);
    BigFloat node(prec), weight(prec);
    mpfr_set(node.get(), x.get(), MPFR_RNDN);
    mpfr_set(weight.get(), w.get(), MPFR_RNDN);
    rule.nodes.push_back(std::move(node));
    rule.weights.push_back(std::move(weight));
  }
  return rule;
}

namespace {

struct Panel {
  BigFloat lo;
  BigFloat hi;
  BigFloat value;
  BigFloat error;
};

BigFloat apply_rule(const GaussRule& rule, const Integrand& f, const BigFloat& mid,
                    const BigFloat& half) {
  BigFloat sum(mid.precision());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, const BigFloat& a, const BigFloat& b,
                           const BigFloat& tolerance, std::size_t max_panels) {
  const Precision prec(std::max(a.precision().bits, b.precision().bits));
  const GaussRule coarse = gauss_legendre(10, prec);
  const GaussRule fine = gauss_legendre(20, prec);

  auto make_panel = [&](const BigFloat& lo, const BigFloat& hi) {
    const BigFloat mid = ldexp(lo + hi, -1);
    const BigFloat half = ldexp(hi - lo, -1);
    BigFloat g20 = apply_rule(fine, f, mid, half);
    BigFloat err = abs(g20 - apply_rule(coarse, f, mid, half));
    return Panel{lo, hi, std::move(g20), std::move(err)};
  };
  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };

  std::vector<Panel> heap;
  heap.push_back(make_panel(a, b));
  BigFloat total_error = heap.front().error;
  while (total_error > tolerance && heap.size() < max_panels) {
    std::pop_heap(heap.begin(), heap.end(), by_error);
    Panel worst = std::move(heap.back());
    heap.pop_back();
    const BigFloat mid = ldexp(worst.lo + worst.hi, -1);
    heap.push_back(make_panel(worst.lo, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(make_panel(mid, worst.hi));
    std::push_heap(heap.begin(), heap.end(), by_error);
    total_error = BigFloat(prec);
    for (const auto& p : heap) total_error += p.error;
  }

  QuadratureResult result{BigFloat(prec), BigFloat(prec), heap.size()};
  for (const auto& p : heap) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  return result;
}

}  // namespace trigverify::numeric
