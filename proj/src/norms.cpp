#include "dunkl/norms.hpp"

#include "dunkl/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dunkl {

void half_line_rule(double kappa, const NormLayout& layout, std::vector<double>& nodes, std::vector<double>& weights) {
  if (!(layout.scale > 0.0) || !(layout.extent > 0.0)) throw std::invalid_argument("NormLayout: bad extents");
  std::vector<double> breaks{0.0};
  double b = 0.0;
  while (b < layout.extent) {
    const double w = b < layout.inner * layout.scale ? layout.scale : b;
    b = std::min(b + w, layout.extent);
    breaks.push_back(b);
  }
  nodes.clear();
  weights.clear();
  const double beta = 2.0 * kappa;
  const QuadratureRule& gl = cached_gauss_legendre(layout.points);
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (k == 0) {
      const QuadratureRule r = power_rule(layout.points, breaks[1], beta);
      nodes.insert(nodes.end(), r.nodes.begin(), r.nodes.end());
      weights.insert(weights.end(), r.weights.begin(), r.weights.end());
      continue;
    }
    const double mid = 0.5 * (breaks[k] + breaks[k + 1]), half = 0.5 * (breaks[k + 1] - breaks[k]);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double x = mid + half * gl.nodes[i];
      nodes.push_back(x);
      weights.push_back(half * gl.weights[i] * std::pow(x, beta));
    }
  }
}

double line_lp_norm(const std::function<double(double)>& F, double kappa, double p, const NormLayout& layout,
                    Parity parity, std::optional<double> tail_exponent) {
  if (!(p >= 1.0)) throw std::domain_error("line_lp_norm: p must be >= 1");
  std::vector<double> nodes, weights;
  half_line_rule(kappa, layout, nodes, weights);
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double a = std::pow(std::abs(F(nodes[i])), p);
    const double b = parity == Parity::none ? std::pow(std::abs(F(-nodes[i])), p) : a;
    total += weights[i] * (a + b);
  }
  if (tail_exponent) {
    // F(x) ~ x^{-m} (c0 + c1 x^{-2}) past E, fitted from F(E) and F(E/2)
    const double E = layout.extent;
    const double m = *tail_exponent;
    const double d0 = p * m - 2.0 * kappa - 1.0;
    if (d0 <= 0.0) return std::numeric_limits<double>::infinity();
    auto side = [&](double sgn) {
      const double a = F(sgn * E) * std::pow(E, m);
      const double b = F(sgn * 0.5 * E) * std::pow(0.5 * E, m);
      const double c1 = (b - a) / 3.0;  // c1 / E^2
      const double c0 = a - c1;
      double t = std::pow(std::abs(a), p) * std::pow(E, 2.0 * kappa + 1.0 - p * m) / d0;
      if (c0 != 0.0 && std::abs(c1 / c0) < 0.5) {
        const double r = c1 / c0;
        t = std::pow(std::abs(c0), p) * std::pow(E, 2.0 * kappa + 1.0 - p * m) * (1.0 / d0 + p * r / (d0 + 2.0));
      }
      return t;
    };
    const double tp = side(1.0);
    total += tp + (parity == Parity::none ? side(-1.0) : tp);
  }
  return std::pow(total, 1.0 / p);
}

}  // namespace dunkl
