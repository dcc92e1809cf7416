#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "trigverify/bigfloat.hpp"

namespace trigverify::numeric {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};

GaussRule gauss_legendre(unsigned points, Precision prec);

struct QuadratureResult {
  BigFloat value;
  BigFloat error_estimate;
  std::size_t panels;
};

using Integrand = std::function<BigFloat(const BigFloat&)>;

// Adaptive bisection with a 10/20-point Gauss-Legendre pair per panel. The
// panel with the largest |G20 - G10| is split until the summed estimate is
// at most `tolerance` or `max_panels` is reached. Works for b < a too.
QuadratureResult integrate(const Integrand& f, const BigFloat& a, const BigFloat& b,
                           const BigFloat& tolerance, std::size_t max_panels = 4000);

}  // namespace trigverify::numeric
