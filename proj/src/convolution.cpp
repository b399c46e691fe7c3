#include "dunkl/convolution.hpp"

#include "dunkl/quadrature.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace dunkl {

Parity product_parity(Parity a, Parity b) {
  if (a == Parity::none || b == Parity::none) return Parity::none;
  return a == b ? Parity::even : Parity::odd;
}

Convolver::Convolver(double kappa, ConvolutionConfig cfg)
    : kappa_(kappa), c_h_(Constants(MultiplicityParams::line(kappa)).c_h()), cfg_(cfg), tr_(kappa, cfg.translation) {}

void Convolver::outer_rule(const Function1D& outer, double inner_scale, std::vector<double>& nodes,
                           std::vector<double>& weights) const {
  const double E = std::min(outer.reach(), cfg_.max_extent);
  std::vector<double> breaks{0.0};
  for (double b = 0.0; b < E;) {
    const double w = cfg_.panel_scale * std::min(outer.length_scale_at(b), inner_scale);
    b = std::min(b + w, E);
    breaks.push_back(b);
  }
  for (double b : outer.breakpoints()) {
    if (b > 0.0 && b < E) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(), [](double a, double b) { return b - a < 1e-12 * (1.0 + b); }),
               breaks.end());
  const double beta = 2.0 * kappa_;
  const QuadratureRule& gl = cached_gauss_legendre(cfg_.points);
  std::vector<double> hn, hw;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (k == 0) {
      const QuadratureRule r = power_rule(cfg_.points, breaks[1], beta);
      hn.insert(hn.end(), r.nodes.begin(), r.nodes.end());
      hw.insert(hw.end(), r.weights.begin(), r.weights.end());
      continue;
    }
    const double mid = 0.5 * (breaks[k] + breaks[k + 1]), half = 0.5 * (breaks[k + 1] - breaks[k]);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double y = mid + half * gl.nodes[i];
      hn.push_back(y);
      hw.push_back(half * gl.weights[i] * std::pow(y, beta));
    }
  }
  nodes.clear();
  weights.clear();
  for (std::size_t i = hn.size(); i-- > 0;) {
    nodes.push_back(-hn[i]);
    weights.push_back(c_h_ * hw[i]);
  }
  for (std::size_t i = 0; i < hn.size(); ++i) {
    nodes.push_back(hn[i]);
    weights.push_back(c_h_ * hw[i]);
  }
}

double Convolver::operator()(const Function1D& f, const Function1D& g, double x) const {
  const bool f_outer = f.reach() <= g.reach();
  const Function1D& outer = f_outer ? f : g;
  const Function1D& inner = f_outer ? g : f;
  std::vector<double> nodes, weights;
  outer_rule(outer, inner.length_scale(), nodes, weights);
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double o = outer(nodes[i]);
    if (o != 0.0) s += weights[i] * o * tr_(inner, x, nodes[i]);
  }
  return s;
}

SampledFunction Convolver::on_grid(const Function1D& f, const Function1D& g, GridPtr grid) const {
  const bool f_outer = f.reach() <= g.reach();
  const Function1D& outer = f_outer ? f : g;
  const Function1D& inner = f_outer ? g : f;
  std::vector<double> nodes, weights;
  outer_rule(outer, inner.length_scale(), nodes, weights);
  std::vector<double> ov(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) ov[i] = outer(nodes[i]);
  const Parity parity = product_parity(f.parity(), g.parity());
  SampledFunction out{grid, std::vector<cplx>(grid->size()), parity};
  const std::size_t n = grid->size();
  for (std::size_t k = 0; k < n; ++k) {
    // use the parity to fill the mirrored half
    if (parity != Parity::none && k < grid->half()) continue;
    const double x = grid->nodes()[k];
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (ov[i] != 0.0) s += weights[i] * ov[i] * tr_(inner, x, nodes[i]);
    }
    out.values[k] = s;
    if (parity != Parity::none) out.values[grid->mirror(k)] = parity == Parity::even ? s : -s;
  }
  return out;
}

SampledFunction Convolver::on_grid(const SampledFunction& f, const SampledFunction& g) const {
  if (!f.grid->same_layout(*g.grid)) throw std::invalid_argument("convolve: grid mismatch");
  if (f.grid->kappa() != kappa_) throw std::invalid_argument("convolve: grid kappa differs from the convolver's");
  return on_grid(interpolating_function(f, "f"), interpolating_function(g, "g"), f.grid);
}

Function1D dilate(const Function1D& phi, double kappa, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("dilate: eps must be positive");
  const double c = std::pow(eps, -(2.0 * kappa + 1.0));
  auto base = std::make_shared<const Function1D>(phi);
  Function1D out(phi.name() + "_eps(" + format_double(eps) + ")", [base, c, eps](double x) { return c * (*base)(x / eps); },
                 eps * phi.length_scale(), eps * phi.reach());
  out.with_parts([base, c, eps](double r) {
       const RadialParts p = base->parts(r / eps);
       return RadialParts{c * p.even, c * p.odd_over_r / eps};
     })
      .with_parity(phi.parity())
      .with_scale_growth(phi.scale_growth());
  if (phi.has_derivative()) out.with_derivative([base, c, eps](double x) { return c / eps * base->derivative(x / eps); });
  std::vector<double> br;
  for (double b : phi.breakpoints()) br.push_back(eps * b);
  out.with_breakpoints(std::move(br));
  return out;
}

SampledFunction dilate(const SampledFunction& phi, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("dilate: eps must be positive");
  const double c = std::pow(eps, -(2.0 * phi.kappa() + 1.0));
  const auto re = phi.real_part();
  std::vector<double> im(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) im[i] = phi.values[i].imag();
  SampledFunction out{phi.grid, std::vector<cplx>(phi.size()), phi.parity};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double x = phi.grid->nodes()[i] / eps;
    out.values[i] = c * cplx(phi.grid->interpolate(re, x), phi.grid->interpolate(im, x));
  }
  return out;
}

double transform_at_zero(const Function1D& f, double kappa) {
  NormLayout layout;
  layout.scale = f.length_scale();
  layout.extent = std::min(f.reach(), 60.0 * f.length_scale());
  std::vector<double> nodes, weights;
  half_line_rule(kappa, layout, nodes, weights);
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * (f(nodes[i]) + f(-nodes[i]));
  return Constants(MultiplicityParams::line(kappa)).c_h() * s;
}

// ---- maximal function --------------------------------------------------------

double translated_ball_indicator(double kappa, double x, double y, double r) {
  if (kappa == 0.0) return std::abs(x - y) <= r ? 1.0 : 0.0;
  const double rho_min = std::abs(std::abs(x) - std::abs(y));
  const double rho_max = std::abs(x) + std::abs(y);
  if (r >= rho_max) return 1.0;
  if (r < rho_min) return 0.0;
  const double B = 2.0 * x * y;
  const double t0 = (x * x + y * y - r * r) / B;
  const double u = std::clamp(0.5 * (1.0 + t0), 0.0, 1.0);
  // Phi_k has CDF I_{(1+t)/2}(k+1, k)
  if (B > 0.0) return boost::math::ibetac(kappa + 1.0, kappa, u);
  return boost::math::ibeta(kappa + 1.0, kappa, u);
}

namespace {

// Panels of [a, b] graded geometrically toward both ends.
void graded_panels(double a, double b, int levels, double ratio, std::vector<std::pair<double, double>>& out) {
  const double m = 0.5 * (a + b);
  const double h = m - a;
  double inner = a + h * std::pow(ratio, levels);
  out.emplace_back(a, inner);
  for (int k = levels; k > 0; --k) {
    const double lo = a + h * std::pow(ratio, k), hi = a + h * std::pow(ratio, k - 1);
    out.emplace_back(lo, hi);
  }
  for (int k = 1; k <= levels; ++k) {
    const double lo = b - h * std::pow(ratio, k - 1), hi = b - h * std::pow(ratio, k);
    out.emplace_back(lo, hi);
  }
  out.emplace_back(b - h * std::pow(ratio, levels), b);
}

}  // namespace

double ball_average(const Function1D& f, double kappa, double x, double r, const MaximalConfig& cfg) {
  if (!(r > 0.0)) throw std::domain_error("ball_average: radius must be positive");
  const Constants C(MultiplicityParams::line(kappa));
  const double ax = std::abs(x);
  const double ymax = std::min(ax + r, f.reach());
  std::vector<double> breaks{0.0, ymax};
  const double kink = std::abs(r - ax);
  if (kink > 0.0 && kink < ymax) breaks.push_back(kink);
  for (double b : f.breakpoints()) {
    if (b > 0.0 && b < ymax) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(), [](double a, double b) { return b - a < 1e-13 * (1.0 + b); }),
               breaks.end());
  // long smooth stretches of f are split further by its length scale
  std::vector<std::pair<double, double>> panels;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double a = breaks[k], b = breaks[k + 1];
    const double ell = f.length_scale_at(a);
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / (4.0 * ell))));
    const double w = (b - a) / pieces;
    for (int j = 0; j < pieces; ++j) {
      const double lo = a + j * w, hi = j + 1 == pieces ? b : a + (j + 1) * w;
      if (pieces == 1) {
        graded_panels(lo, hi, cfg.grading, cfg.ratio, panels);
      } else if (j == 0) {
        graded_panels(lo, lo + 2.0 * w, cfg.grading, cfg.ratio, panels);
        ++j;
        if (j + 1 == pieces) break;
      } else if (j + 1 == pieces) {
        graded_panels(lo, hi, cfg.grading, cfg.ratio, panels);
      } else {
        panels.emplace_back(lo, hi);
      }
    }
  }
  const QuadratureRule& gl = cached_gauss_legendre(cfg.points);
  const double beta = 2.0 * kappa;
  double s = 0.0;
  auto integrand = [&](double y) {
    return f(y) * translated_ball_indicator(kappa, x, y, r) + f(-y) * translated_ball_indicator(kappa, x, -y, r);
  };
  for (const auto& [lo, hi] : panels) {
    if (!(hi > lo)) continue;
    if (lo == 0.0) {
      const QuadratureRule pr = power_rule(cfg.points, hi, beta);
      for (std::size_t i = 0; i < pr.size(); ++i) s += pr.weights[i] * integrand(pr.nodes[i]);
      continue;
    }
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double y = mid + half * gl.nodes[i];
      s += half * gl.weights[i] * std::pow(y, beta) * integrand(y);
    }
  }
  return s / C.ball_measure(r);
}

double ball_average_translation(const Function1D& f, double kappa, double x, double r, const Translator& tr,
                                int points) {
  const Constants C(MultiplicityParams::line(kappa));
  const double beta = 2.0 * kappa;
  // panels of width <= length scale of f on [0, r]
  const int pieces = std::max(1, static_cast<int>(std::ceil(r / f.length_scale())));
  double s = 0.0;
  const QuadratureRule& gl = cached_gauss_legendre(points);
  for (int j = 0; j < pieces; ++j) {
    const double lo = r * j / pieces, hi = r * (j + 1) / pieces;
    if (j == 0) {
      const QuadratureRule pr = power_rule(points, hi, beta);
      for (std::size_t i = 0; i < pr.size(); ++i) s += pr.weights[i] * (tr(f, x, pr.nodes[i]) + tr(f, x, -pr.nodes[i]));
      continue;
    }
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double y = mid + half * gl.nodes[i];
      s += half * gl.weights[i] * std::pow(y, beta) * (tr(f, x, y) + tr(f, x, -y));
    }
  }
  return s / C.ball_measure(r);
}

std::vector<double> log_radii(double r_min, double r_max, int count) {
  if (count < 1) throw std::invalid_argument("log_radii: empty radii");
  if (!(r_min > 0.0) || !(r_max >= r_min)) throw std::invalid_argument("log_radii: need 0 < r_min <= r_max");
  std::vector<double> r(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    r[static_cast<std::size_t>(i)] = r_min * std::pow(r_max / r_min, t);
  }
  return r;
}

std::vector<double> default_radii(const Function1D& f, int count) {
  const double ell = f.length_scale();
  const double reach = std::min(f.reach(), 12.0 * ell);
  return log_radii(ell / 64.0, 64.0 * ell + 2.0 * reach, count);
}

double maximal_at(const Function1D& f, double kappa, double x, std::span<const double> radii, const MaximalConfig& cfg,
                  double* argmax) {
  if (radii.empty()) throw std::invalid_argument("maximal_function: empty radii");
  double best = 0.0, best_r = radii[0];
  for (double r : radii) {
    const double v = std::abs(ball_average(f, kappa, x, r, cfg));
    if (v > best) {
      best = v;
      best_r = r;
    }
  }
  if (argmax) *argmax = best_r;
  return best;
}

MaximalResult maximal_function(const Function1D& f, double kappa, std::span<const double> xs,
                               std::span<const double> radii, const MaximalConfig& cfg) {
  MaximalResult out;
  out.x.assign(xs.begin(), xs.end());
  out.radii.assign(radii.begin(), radii.end());
  for (double x : xs) {
    double am = 0.0;
    out.values.push_back(maximal_at(f, kappa, x, radii, cfg, &am));
    out.argmax.push_back(am);
  }
  return out;
}

std::vector<double> maximal_lp_norms(const Function1D& f, double kappa, std::span<const double> ps,
                                     std::span<const double> radii, const MaximalConfig& cfg, int points) {
  NormLayout layout;
  layout.scale = f.length_scale();
  layout.extent = 16.0 * f.length_scale() + std::min(f.reach(), 8.0 * f.length_scale());
  layout.points = points;
  std::vector<double> nodes, weights;
  half_line_rule(kappa, layout, nodes, weights);
  // M f is even when f has a parity
  const bool both = f.parity() == Parity::none;
  std::vector<double> mp(nodes.size()), mm(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    mp[i] = maximal_at(f, kappa, nodes[i], radii, cfg);
    mm[i] = both ? maximal_at(f, kappa, -nodes[i], radii, cfg) : mp[i];
  }
  const double E = layout.extent;
  const double tp = maximal_at(f, kappa, E, radii, cfg);
  const double tm = both ? maximal_at(f, kappa, -E, radii, cfg) : tp;
  std::vector<double> out;
  for (double p : ps) {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * (std::pow(mp[i], p) + std::pow(mm[i], p));
    const double decay = p * (2.0 * kappa + 1.0) - 2.0 * kappa - 1.0;
    s += (std::pow(tp, p) + std::pow(tm, p)) * std::pow(E, 2.0 * kappa + 1.0) / decay;
    out.push_back(std::pow(s, 1.0 / p));
  }
  return out;
}

// ---- checks -------------------------------------------------------------------

namespace {

NormLayout layout_for(const Function1D& a, const Function1D& b) {
  NormLayout layout;
  layout.scale = std::min(a.length_scale(), b.length_scale());
  const double ra = std::min(a.reach(), 20.0 * a.length_scale());
  const double rb = std::min(b.reach(), 20.0 * b.length_scale());
  layout.extent = ra + rb;
  return layout;
}

// Values of F at the nodes of the half-line rule and their mirrors; then the L^p norm.
struct HalfLineSamples {
  std::vector<double> nodes, weights, plus, minus;
  double norm(double p) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * (std::pow(std::abs(plus[i]), p) + std::pow(std::abs(minus[i]), p));
    return std::pow(s, 1.0 / p);
  }
};

HalfLineSamples sample_half_line(const std::function<double(double)>& F, double kappa, const NormLayout& layout,
                                 Parity parity) {
  HalfLineSamples h;
  half_line_rule(kappa, layout, h.nodes, h.weights);
  for (double x : h.nodes) {
    const double a = F(x);
    h.plus.push_back(a);
    if (parity == Parity::even) {
      h.minus.push_back(a);
    } else if (parity == Parity::odd) {
      h.minus.push_back(-a);
    } else {
      h.minus.push_back(F(-x));
    }
  }
  return h;
}

}  // namespace

OperatorReport convolution_theorem_check(const Function1D& f, const Function1D& g, double kappa, double tolerance) {
  Stopwatch sw;
  auto grid = make_grid(kappa, 256, 12.0);
  const DunklTransform1D T(grid);
  const Convolver conv(kappa);
  const auto fg = conv.on_grid(f, g, grid);
  const auto lhs = T.forward(fg);
  const auto F = T.forward(SampledFunction::sample(f, grid));
  const auto G = T.forward(SampledFunction::sample(g, grid));
  std::vector<double> computed, reference;
  double sup = 0.0;
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    const cplx prod = F.values[j] * G.values[j];
    sup = std::max(sup, std::abs(prod));
    computed.push_back(lhs.values[j].real());
    computed.push_back(lhs.values[j].imag());
    reference.push_back(prod.real());
    reference.push_back(prod.imag());
  }
  OperatorReport r = compare("convolution_theorem", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "product of independently computed transforms", sup);
  r.inputs = Json{{"f", f.name()}, {"g", g.name()}, {"kappa", kappa}, {"grid_n", 256}, {"cutoff", 12.0}};
  r.computed.clear();
  r.reference.clear();
  r.note = "computed/reference arrays omitted; sup |f^ g^| = " + format_double(sup);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport young_check(const Function1D& f, const Function1D& g, double kappa, double p, double tolerance) {
  Stopwatch sw;
  const Convolver conv(kappa);
  const NormLayout layout = layout_for(f, g);
  const auto fg = sample_half_line([&](double x) { return conv(f, g, x); }, kappa, layout,
                                   product_parity(f.parity(), g.parity()));
  const double lhs = fg.norm(p);
  NormLayout lf = layout;
  lf.extent = std::min(f.reach(), 40.0 * f.length_scale());
  NormLayout lg = layout;
  lg.scale = g.length_scale();
  lg.extent = std::min(g.reach(), 40.0 * g.length_scale());
  const double fp = line_lp_norm(f, kappa, p, lf, f.parity());
  const double g1 = line_lp_norm(g, kappa, 1.0, lg, g.parity());
  const double ratio = lhs / (g1 * fp);
  OperatorReport r = scalar_report("young_bound", std::max(0.0, ratio - 1.0), tolerance, ErrorMode::relative,
                                   "inequality with constant 1");
  r.computed = {ratio};
  r.reference = {1.0};
  r.inputs = Json{{"f", f.name()}, {"g", g.name()}, {"kappa", kappa}, {"p", p}};
  r.note = "||f*g||_p = " + format_double(lhs) + ", ||g||_1 ||f||_p = " + format_double(g1 * fp);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport approximate_identity_check(const Function1D& f, const Function1D& phi, double kappa,
                                          std::span<const double> epsilons, double p, double final_tolerance) {
  Stopwatch sw;
  if (epsilons.empty()) throw std::invalid_argument("approximate_identity_check: no epsilons");
  const double mass = transform_at_zero(phi, kappa);
  const Function1D phin = phi.scaled(1.0 / mass);
  const Convolver conv(kappa);
  std::vector<double> errors;
  for (double eps : epsilons) {
    const Function1D pe = dilate(phin, kappa, eps);
    NormLayout layout = layout_for(f, pe);
    layout.scale = std::min(f.length_scale(), std::max(pe.length_scale(), f.length_scale() / 8.0));
    const auto diff = sample_half_line([&](double x) { return conv(f, pe, x) - f(x); }, kappa, layout,
                                       product_parity(f.parity(), phi.parity()));
    errors.push_back(diff.norm(p));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < errors.size(); ++i) monotone = monotone && errors[i] < errors[i - 1];
  const double err = monotone ? errors.back() : std::numeric_limits<double>::infinity();
  OperatorReport r = scalar_report("approximate_identity", err, final_tolerance, ErrorMode::absolute,
                                   "limit f * phi_eps -> f");
  r.computed = errors;
  r.reference.assign(errors.size(), 0.0);
  r.inputs = Json{{"f", f.name()}, {"phi", phi.name()}, {"kappa", kappa}, {"p", p},
                  {"epsilons", std::vector<double>(epsilons.begin(), epsilons.end())}};
  r.note = std::string(monotone ? "errors decrease monotonically" : "errors are not monotone");
  if (std::abs(mass - 1.0) > 1e-8) r.note += "; phi normalized by factor " + format_double(1.0 / mass);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport domination_check(const Function1D& f, const Function1D& phi, double kappa,
                                std::span<const double> epsilons, double bound) {
  Stopwatch sw;
  const Convolver conv(kappa);
  const auto radii = default_radii(f);
  const double R = std::min(f.reach(), 8.0 * f.length_scale());
  std::vector<double> ratios;
  std::vector<Function1D> kernels;
  for (double eps : epsilons) kernels.push_back(dilate(phi, kappa, eps));
  for (int i = 0; i < 12; ++i) {
    const double x = -2.0 * R + 4.0 * R * (i + 0.5) / 12.0;
    double sup = 0.0;
    for (const auto& k : kernels) sup = std::max(sup, std::abs(conv(f, k, x)));
    const double m = maximal_at(f, kappa, x, radii);
    if (m == 0.0) {
      if (sup == 0.0) continue;
      ratios.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    ratios.push_back(sup / m);
  }
  const double worst = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
  OperatorReport r = scalar_report("maximal_domination", worst, bound, ErrorMode::absolute,
                                   "empirical constant, sup_eps |f*phi_eps| / M f");
  r.computed = ratios;
  r.inputs = Json{{"f", f.name()}, {"phi", phi.name()}, {"kappa", kappa},
                  {"epsilons", std::vector<double>(epsilons.begin(), epsilons.end())}};
  r.runtime_s = sw.seconds();
  return r;
}

}  // namespace dunkl
