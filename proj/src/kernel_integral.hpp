#pragma once

// y-integration engine shared by the potentials and the Riesz transform:
// panels sized by the local length scale of f, a power rule at y = 0 and
// geometric splitting toward 0.

#include "dunkl/potentials.hpp"
#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dunkl::detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return b - a <= 1e-13 * (1.0 + std::abs(b)); }),
          v.end());
}

// Subdivide [breaks[k], breaks[k+1]] into panels no wider than width(left end).
template <class Width>
std::vector<double> refine(const std::vector<double>& breaks, Width&& width) {
  std::vector<double> out{breaks.front()};
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double a = breaks[k];
    const double b = breaks[k + 1];
    while (b - a > width(a) * (1.0 + 1e-9)) {
      a += width(a);
      if (b - a < 0.25 * width(a)) break;
      out.push_back(a);
    }
    out.push_back(b);
  }
  return out;
}

// int_0^Y y^beta g(y) dy over the given panels (first panel starts at 0), graded toward 0.
// Weights include y^beta.
inline void y_rule(const std::vector<double>& breaks, double beta, int levels, double ratio, int n,
            std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.clear();
  weights.clear();
  const QuadratureRule& gl = cached_gauss_legendre(n);
  auto add_gl = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double y = mid + half * gl.nodes[i];
      nodes.push_back(y);
      weights.push_back(half * gl.weights[i] * std::pow(y, beta));
    }
  };
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double lo = breaks[k], hi = breaks[k + 1];
    if (lo > 0.0) {
      // panels close to y = 0 relative to their width are split geometrically
      double a = lo;
      while (a < 0.5 * (hi - a)) {
        add_gl(a, std::min(hi, a / ratio));
        a /= ratio;
      }
      if (a < hi) add_gl(a, hi);
      continue;
    }
    double inner = hi;
    for (int l = 0; l < levels; ++l) inner *= ratio;
    const QuadratureRule pr = power_rule(n, inner, beta);
    nodes.insert(nodes.end(), pr.nodes.begin(), pr.nodes.end());
    weights.insert(weights.end(), pr.weights.begin(), pr.weights.end());
    for (double a = inner; a < hi * (1.0 - 1e-12); a /= ratio) add_gl(a, std::min(hi, a / ratio));
  }
}

struct KernelSpec {
  double beta;           // y^beta singularity at 0 (weights carry it)
  double reach = kInf;   // kernel vanishes beyond
  double scale = kInf;   // max panel width imposed by the kernel
  double tail = 0.0;     // w(y) ~ y^{-tail} for large y
  double sign = 1.0;     // tau_y f + sign tau_{-y} f
  double y_min = 0.0;    // truncation |y| >= y_min
};

// int_{y_min}^inf y^beta w(y) [tau_y f(x) + sign tau_{-y} f(x)] dy.
template <class W>
double kernel_integral(const Translator& tr, const Function1D& f, double x, const KernelSpec& k, W&& w,
                       TailExponent tail, const PotentialConfig& cfg) {
  const double ax = std::abs(x);
  const double ell = f.length_scale();
  const bool bounded = std::isfinite(f.reach());
  double Y = bounded ? ax + f.reach() : cfg.far * std::max(ax, ell);
  const bool far_cut = !bounded && Y < k.reach;
  Y = std::min(Y, k.reach);
  if (!bounded && far_cut && !tail) throw std::invalid_argument("potential: input of infinite reach needs a tail exponent");
  if (k.y_min >= Y) return 0.0;
  std::vector<double> breaks{k.y_min, Y};
  const double lo = bounded ? ax - f.reach() : 0.0;
  if (lo > 2.0 * ell && lo > k.y_min && lo < Y) breaks.push_back(lo);
  if (ax > k.y_min && ax < Y) breaks.push_back(ax);
  for (double b : f.breakpoints()) {
    for (double c : {ax - b, ax + b, b - ax}) {
      if (c > k.y_min && c < Y) breaks.push_back(c);
    }
  }
  sort_unique(breaks);
  const double near = ax + 8.0 * ell;
  auto width = [&](double y) {
    double h = cfg.panel_scale * std::min(f.length_scale_at(std::max(0.0, y - ax)), k.scale);
    if (!bounded && y > near) h = std::max(h, 0.5 * (y - ax));
    return h;
  };
  std::vector<double> panels = refine(breaks, width);
  // skip the stretch where the translate vanishes
  if (lo > 2.0 * ell && lo > k.y_min) {
    auto it = std::find_if(panels.begin(), panels.end(), [&](double b) { return b >= lo * (1.0 - 1e-13); });
    panels.erase(panels.begin(), it);
  }
  std::vector<double> nodes, weights;
  y_rule(panels, k.beta, cfg.grading, cfg.ratio, cfg.points, nodes, weights);
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double y = nodes[i];
    const double wy = w(y);
    if (wy == 0.0) continue;
    s += weights[i] * wy * (tr(f, x, y) + k.sign * tr(f, x, -y));
  }
  if (far_cut) {
    // integrand ~ y^{beta - tail_w - m}
    const double p = k.beta - k.tail - *tail;
    if (!(p < -1.0)) return kInf;
    const double end = std::pow(Y, k.beta) * w(Y) * (tr(f, x, Y) + k.sign * tr(f, x, -Y));
    s += end * Y / (-p - 1.0);
  }
  return s;
}

}  // namespace dunkl::detail
