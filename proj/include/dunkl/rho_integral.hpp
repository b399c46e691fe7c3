#pragma once

// Integrals of the form
//   int_{-1}^{1} g(rho(t)) (1-t)^a (1+t)^b dt,   rho(t)^2 = A - B t,
// which carry the rank-one generalized translation. The integrand is smooth
// in rho except at known radii, vanishes beyond a reach radius, and varies on
// a local length scale; when |B| is large compared with that scale the mass
// concentrates near the t-endpoint where rho is smallest. The integral is
// taken in v = distance to that endpoint with panels sized in rho.

#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

namespace dunkl {

struct RhoIntegralConfig {
  int points = 16;           // nodes per panel
  double resolution = 2.0;   // panel width in rho, in units of the local length scale
  int max_panels = 4000;
};

namespace detail {

inline double rho_step(double rho, double ell, double resolution) {
  // oscillation scale ell near the origin, ell^2/rho further out (Gaussian-type decay)
  return resolution * ell * std::min(1.0, ell / std::max(rho, 1e-300));
}

}  // namespace detail

template <class G, class Scale>
double rho_integral(double A, double B, double a, double b, G&& g, Scale&& scale, double reach,
                    std::span<const double> breaks, const RhoIntegralConfig& cfg = {}) {
  const double absB = std::abs(B);
  const double rho_min2 = std::max(0.0, A - absB);
  // exponent of the weight at v = 0 and at v = 2
  const double e0 = B >= 0.0 ? a : b;
  const double e2 = B >= 0.0 ? b : a;
  const int n = cfg.points;

  if (absB == 0.0 || absB <= 1e-15 * A) {
    // rho constant in t
    const double rho = std::sqrt(A);
    if (rho > reach) return 0.0;
    const double mass = std::pow(2.0, a + b + 1.0) * std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    return g(rho) * mass;
  }

  auto rho_of = [&](double v) { return std::sqrt(rho_min2 + absB * v); };
  auto v_of_rho = [&](double r) { return (r * r - rho_min2) / absB; };

  double V = 2.0;
  bool open_end = true;  // v = 2 is an integrable-singular endpoint of the weight
  if (std::isfinite(reach)) {
    const double vr = v_of_rho(reach);
    if (vr <= 0.0) return 0.0;
    if (vr < 2.0) {
      V = vr;
      open_end = false;
    }
  }

  auto next_v = [&](double v) {
    const double r = rho_of(v);
    const double step = detail::rho_step(r, scale(r), cfg.resolution);
    return v_of_rho(r + step);
  };

  // breakpoints mapped into (0, V)
  double vb_buf[64];
  std::size_t nb = 0;
  for (double br : breaks) {
    const double vb = v_of_rho(br);
    if (vb > 0.0 && vb < V && nb < 64) vb_buf[nb++] = vb;
  }
  std::sort(vb_buf, vb_buf + nb);

  // one Gauss-Jacobi rule over the whole t-interval when it is resolved already
  if (open_end && nb == 0 && next_v(0.0) >= 2.0) {
    const QuadratureRule& r = cached_gauss_jacobi(n, e2, e0);  // v = 1 + s
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * g(rho_of(1.0 + r.nodes[i]));
    return s;
  }

  const QuadratureRule& gl = cached_gauss_legendre(n);
  const QuadratureRule& left = cached_gauss_jacobi(n, 0.0, e0);
  const QuadratureRule& right = cached_gauss_jacobi(n, 0.0, e2);
  double total = 0.0;
  double v = 0.0;
  std::size_t ib = 0;
  int panels = 0;
  while (v < V) {
    if (++panels > cfg.max_panels) throw std::runtime_error("rho_integral: panel budget exceeded");
    while (ib < nb && vb_buf[ib] <= v * (1.0 + 1e-14)) ++ib;
    double step = next_v(v) - v;
    if (v > 0.0) step = std::min(step, v);  // geometric grading away from v = 0
    const double rem = V - v;
    if (open_end) {
      const bool last_ok = rem <= step && rem <= v && ib >= nb;
      if (last_ok) {
        // final panel [v, 2] with the weight (2 - v)^{e2} built in
        const double h = rem;
        const double scale_w = std::pow(0.5 * h, e2 + 1.0);
        double s = 0.0;
        for (std::size_t i = 0; i < right.size(); ++i) {
          const double u = 0.5 * h * (1.0 + right.nodes[i]);
          const double vv = 2.0 - u;
          s += right.weights[i] * std::pow(vv, e0) * g(rho_of(vv));
        }
        total += scale_w * s;
        break;
      }
      step = std::min(step, 0.5 * rem);
    } else {
      // keep panels away from the weight singularity at v = 2 even when the reach cuts in front of it
      step = std::min({step, rem, 0.5 * (2.0 - v)});
    }
    if (v == 0.0) step = std::min(step, 1.0);
    if (ib < nb) step = std::min(step, vb_buf[ib] - v);
    const double hi = v + step;
    if (v == 0.0) {
      const double scale_w = std::pow(0.5 * step, e0 + 1.0);
      double s = 0.0;
      for (std::size_t i = 0; i < left.size(); ++i) {
        const double vv = 0.5 * step * (1.0 + left.nodes[i]);
        s += left.weights[i] * std::pow(2.0 - vv, e2) * g(rho_of(vv));
      }
      total += scale_w * s;
    } else {
      const double mid = 0.5 * (v + hi), half = 0.5 * step;
      double s = 0.0;
      for (std::size_t i = 0; i < gl.size(); ++i) {
        const double vv = mid + half * gl.nodes[i];
        s += gl.weights[i] * std::pow(vv, e0) * std::pow(2.0 - vv, e2) * g(rho_of(vv));
      }
      total += half * s;
    }
    v = hi;
    if (!open_end && V - v <= 1e-15 * V) break;
  }
  return total;
}

}  // namespace dunkl
