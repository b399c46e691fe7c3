#include "dunkl/potentials.hpp"

#include "kernel_integral.hpp"

#include "dunkl/norms.hpp"
#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace dunkl {

namespace {

using namespace detail;

double decay_of(const Function1D& f, double even, double odd) {
  return f.parity() == Parity::odd ? odd : even;
}

ProfileLayout layout_of(const Function1D& f) {
  ProfileLayout layout;
  layout.scale = f.length_scale();
  return layout;
}

}  // namespace

// ---- Riesz potential ---------------------------------------------------------

RieszPotential::RieszPotential(double kappa, double alpha, PotentialConfig cfg)
    : kappa_(kappa), alpha_(alpha), norm_(0.0), cfg_(cfg), tr_(kappa, cfg.translation) {
  if (!(alpha > 0.0 && alpha < 2.0 * kappa + 1.0)) {
    throw std::domain_error("Riesz potential: alpha must lie in (0, 2 kappa + 1)");
  }
  norm_ = 1.0 / Constants(MultiplicityParams::line(kappa)).riesz_potential_normalizer(alpha);
}

double RieszPotential::operator()(const Function1D& f, double x, TailExponent tail) const {
  const KernelSpec k{alpha_ - 1.0};
  return norm_ * kernel_integral(tr_, f, x, k, [](double) { return 1.0; }, tail, cfg_);
}

SampledFunction RieszPotential::on_grid(const Function1D& f, GridPtr grid, TailExponent tail) const {
  SampledFunction out{grid, std::vector<cplx>(grid->size()), f.parity()};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    if (f.parity() != Parity::none && i < grid->half()) continue;
    const double v = (*this)(f, grid->nodes()[i], tail);
    out.values[i] = v;
    if (f.parity() != Parity::none) out.values[grid->mirror(i)] = f.parity() == Parity::even ? v : -v;
  }
  return out;
}

SampledFunction RieszPotential::on_grid(const SampledFunction& f) const {
  if (f.kappa() != kappa_) throw std::invalid_argument("Riesz potential: grid kappa differs");
  return on_grid(interpolating_function(f), f.grid);
}

LineProfile RieszPotential::tabulate(const Function1D& f, TailExponent tail) const {
  return LineProfile::tabulate([&](double x) { return (*this)(f, x, tail); }, f.parity(), layout_of(f), even_decay(),
                               odd_decay() + 1.0);
}

// ---- Bessel kernel -----------------------------------------------------------

BesselKernel::BesselKernel(double kappa, double alpha, BesselKernelConfig cfg)
    : kappa_(kappa), alpha_(alpha), nu_(-kappa + 0.5 * (alpha - 1.0)), prefactor_(0.0), cfg_(cfg) {
  if (!(alpha > 0.0)) throw std::domain_error("Bessel kernel: alpha must be positive");
  if (!(kappa >= 0.0)) throw std::domain_error("Bessel kernel: kappa must be nonnegative");
  prefactor_ = std::exp(-(kappa + 0.5) * std::log(2.0) - std::lgamma(0.5 * alpha));
  std::vector<double> breaks;
  const double lo = std::log(cfg_.r_min), hi = std::log(cfg_.r_max);
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / cfg_.panel)));
  for (int i = 0; i <= panels; ++i) breaks.push_back(lo + (hi - lo) * i / panels);
  log_table_ = ChebyshevTable::build(std::move(breaks), cfg_.points, [this](double u) { return std::log(direct(std::exp(u))); });
}

double BesselKernel::direct(double r) const {
  if (r < 0.0) r = -r;
  const double nu = nu_;
  const double a = std::abs(nu);
  double u_hi = std::log(r + a + 60.0) + 0.5;
  double u_lo;
  if (r > 0.0) {
    u_lo = std::log(r * r / (4.0 * (r + 60.0 + 4.0 * a)));
    if (nu > 0.0) u_lo = std::max(u_lo, -45.0 / nu);
  } else {
    if (!(nu > 0.0)) return kInf;
    u_lo = -45.0 / nu;
  }
  const double h = cfg_.step;
  const int n = static_cast<int>(std::ceil((u_hi - u_lo) / h));
  const double r2 = 0.25 * r * r;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double u = u_lo + i * h;
    const double t = std::exp(u);
    s += std::exp(-t - r2 / t + nu * u);
  }
  return prefactor_ * h * s;
}

double BesselKernel::operator()(double r) const {
  r = std::abs(r);
  if (r > cfg_.r_max) return 0.0;
  if (r < cfg_.r_min) return direct(r);
  return std::exp(log_table_.eval(std::log(r)));
}

double BesselKernel::small_y_exponent() const { return std::min(alpha_ - 1.0, 2.0 * kappa_); }

double BesselKernel::transform_at(double xi) const {
  const double beta = small_y_exponent();
  const double w = xi > 0.0 ? std::min(1.0, 2.0 / xi) : 1.0;
  std::vector<double> breaks{0.0, 1.0};
  for (double b = 1.0; b < cfg_.r_max;) {
    b = std::min(b + w, cfg_.r_max);
    breaks.push_back(b);
  }
  std::vector<double> nodes, weights;
  y_rule(breaks, beta, 14, 0.2, 16, nodes, weights);
  const double c_h = Constants(MultiplicityParams::line(kappa_)).c_h();
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double y = nodes[i];
    s += weights[i] * (*this)(y) * std::pow(y, 2.0 * kappa_ - beta) * normalized_bessel_j(kappa_ - 0.5, xi * y);
  }
  return 2.0 * c_h * s;
}

void BesselKernel::write_csv(const std::string& path) const {
  std::vector<double> r, v;
  const double lo = std::log(1e-4), hi = std::log(std::min(50.0, cfg_.r_max));
  for (int i = 0; i <= 400; ++i) {
    r.push_back(std::exp(lo + (hi - lo) * i / 400.0));
    v.push_back((*this)(r.back()));
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_radial_csv(os, r, v, "G_alpha_kappa",
                   {"Bessel kernel", "kappa = " + format_double(kappa_), "alpha = " + format_double(alpha_)});
}

// ---- Bessel potential --------------------------------------------------------

BesselPotential::BesselPotential(double kappa, double alpha, PotentialConfig cfg)
    : kappa_(kappa),
      alpha_(alpha),
      c_h_(Constants(MultiplicityParams::line(kappa)).c_h()),
      cfg_(cfg),
      kernel_(std::make_shared<const BesselKernel>(kappa, alpha)),
      tr_(kappa, cfg.translation) {
  if (cfg_.grading == 0) cfg_.grading = 12;
}

double BesselPotential::operator()(const Function1D& f, double x) const {
  const BesselKernel& G = *kernel_;
  KernelSpec k{G.small_y_exponent()};
  k.reach = G.reach();
  k.scale = 2.0;
  const double shift = 2.0 * kappa_ - k.beta;
  return c_h_ * kernel_integral(
                    tr_, f, x, k, [&G, shift](double y) { return G(y) * std::pow(y, shift); }, std::nullopt, cfg_);
}

SampledFunction BesselPotential::on_grid(const Function1D& f, GridPtr grid) const {
  SampledFunction out{grid, std::vector<cplx>(grid->size()), f.parity()};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    if (f.parity() != Parity::none && i < grid->half()) continue;
    const double v = (*this)(f, grid->nodes()[i]);
    out.values[i] = v;
    if (f.parity() != Parity::none) out.values[grid->mirror(i)] = f.parity() == Parity::even ? v : -v;
  }
  return out;
}

SampledFunction BesselPotential::on_grid(const SampledFunction& f) const {
  if (f.kappa() != kappa_) throw std::invalid_argument("Bessel potential: grid kappa differs");
  return on_grid(interpolating_function(f), f.grid);
}

LineProfile BesselPotential::tabulate(const Function1D& f) const {
  ProfileLayout layout = layout_of(f);
  layout.outer = std::max(layout.outer, 100.0 / f.length_scale());
  return LineProfile::tabulate([&](double x) { return (*this)(f, x); }, f.parity(), layout);
}

SampledFunction bessel_potential_spectral(const SampledFunction& f, const DunklTransform1D& transform, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("Bessel potential: alpha must be positive");
  return transform.apply_multiplier(f, [alpha](double y) { return cplx(std::pow(1.0 + y * y, -0.5 * alpha), 0.0); });
}

// ---- checks ------------------------------------------------------------------

namespace {

std::vector<double> sample_points(const Function1D& f) {
  const double l = f.length_scale();
  std::vector<double> xs{0.3 * l, 0.9 * l, 1.7 * l, 3.1 * l};
  if (f.parity() == Parity::none) {
    for (double x : {-0.5 * l, -1.3 * l, -2.6 * l}) xs.push_back(x);
  }
  return xs;
}

NormLayout freq_layout(double scale, double extent) {
  NormLayout layout;
  layout.scale = scale;
  layout.extent = extent;
  layout.inner = 8.0;
  return layout;
}

}  // namespace

OperatorReport riesz_multiplier_check(const Function1D& f, const Function1D& g, double kappa, double alpha,
                                      double tolerance) {
  Stopwatch sw;
  const RieszPotential I(kappa, alpha);
  NormLayout lg;
  lg.scale = g.length_scale();
  lg.extent = std::min(g.reach(), 20.0 * g.length_scale());
  std::vector<double> nodes, weights;
  half_line_rule(kappa, lg, nodes, weights);
  double lhs = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes[i];
    lhs += weights[i] * (I(f, x) * g(x) + I(f, -x) * g(-x));
  }
  auto grid = make_grid(kappa, 256, 12.0);
  const DunklTransform1D T(grid);
  const auto fs = SampledFunction::sample(f, grid);
  const auto gs = SampledFunction::sample(g, grid);
  const double fscale = 1.0 / std::min(f.length_scale(), g.length_scale());
  half_line_rule(kappa - 0.5 * alpha, freq_layout(0.5 * fscale, 16.0 * fscale), nodes, weights);
  cplx rhs = 0.0;
  double mag = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (double sgn : {1.0, -1.0}) {
      const cplx a = T.forward_at(fs, sgn * nodes[i]);
      const cplx b = T.forward_at(gs, sgn * nodes[i]);
      rhs += weights[i] * a * std::conj(b);
      mag += weights[i] * std::abs(a) * std::abs(b);
    }
  }
  const double scale = std::max(std::abs(lhs), mag);
  OperatorReport r = compare("riesz_multiplier_pairing", {lhs, 0.0}, {rhs.real(), rhs.imag()}, tolerance,
                             ErrorMode::relative, "transform-side pairing with |xi|^{-alpha}", scale);
  r.inputs = Json{{"f", f.name()}, {"g", g.name()}, {"kappa", kappa}, {"alpha", alpha}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bilinear_identity_check(int n, double alpha, const Function1D& phi, double kappa, double tolerance) {
  Stopwatch sw;
  if (n != 0 && n != 1) throw std::invalid_argument("bilinear_identity_check: n must be 0 or 1");
  if (!(alpha > 0.0 && alpha < 2.0 * kappa + 1.0)) throw std::domain_error("bilinear_identity_check: alpha out of range");
  const Constants C(MultiplicityParams::line(kappa));
  const double sgn = n == 0 ? 1.0 : -1.0;
  auto grid = make_grid(kappa, 256, 12.0);
  const DunklTransform1D T(grid);
  const auto ps = SampledFunction::sample(phi, grid);
  const double fs = 1.0 / phi.length_scale();
  std::vector<double> nodes, weights;
  half_line_rule(0.5 * (alpha - 1.0), freq_layout(0.5 * fs, 16.0 * fs), nodes, weights);
  cplx lhs = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    lhs += weights[i] * (T.forward_at(ps, nodes[i]) + sgn * T.forward_at(ps, -nodes[i]));
  }
  NormLayout lx;
  lx.scale = phi.length_scale();
  lx.extent = std::min(phi.reach(), 20.0 * phi.length_scale());
  half_line_rule(kappa - 0.5 * alpha, lx, nodes, weights);
  double integral = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) integral += weights[i] * (phi(nodes[i]) + sgn * phi(-nodes[i]));
  const cplx rhs = C.d_n_kappa_alpha(n, alpha) * integral;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  OperatorReport r = compare("bilinear_identity", {lhs.real(), lhs.imag()}, {rhs.real(), rhs.imag()}, tolerance,
                             ErrorMode::relative, "right-hand side with d_{n,k}^alpha", scale);
  r.inputs = Json{{"n", n}, {"alpha", alpha}, {"phi", phi.name()}, {"kappa", kappa}};
  r.runtime_s = sw.seconds();
  return r;
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

OperatorReport scaling_exponent_check(double alpha, double p, double kappa, std::span<const double> scales,
                                      double tolerance) {
  Stopwatch sw;
  const double hd = 2.0 * kappa + 1.0;
  const double inv_q = 1.0 / p - alpha / hd;
  if (!(inv_q > 0.0)) throw std::domain_error("scaling_exponent_check: 1/p must exceed alpha/(2 kappa + 1)");
  if (scales.size() < 2) throw std::invalid_argument("scaling_exponent_check: need at least two scales");
  const double q = 1.0 / inv_q;
  const RieszPotential I(kappa, alpha);
  std::vector<double> ls, lI, lf, ratios;
  for (double s : scales) {
    const Function1D fs = families::gaussian(s);
    NormLayout lf_layout;
    lf_layout.scale = 1.0 / s;
    lf_layout.extent = std::min(fs.reach(), 40.0 / s);
    const double nf = line_lp_norm(fs, kappa, p, lf_layout, Parity::even);
    NormLayout li;
    li.scale = 1.0 / s;
    li.extent = 64.0 / s;
    const double ni = line_lp_norm([&](double x) { return I(fs, x); }, kappa, q, li, Parity::even, I.even_decay());
    ls.push_back(std::log(s));
    lI.push_back(std::log(ni));
    lf.push_back(std::log(nf));
    ratios.push_back(ni / nf);
  }
  const double slope_I = fit_slope(ls, lI), slope_f = fit_slope(ls, lf);
  const double want_I = -alpha - hd / q, want_f = -hd / p;
  const double err = std::max(std::abs(slope_I - want_I) / std::abs(want_I), std::abs(slope_f - want_f) / std::abs(want_f));
  OperatorReport r = scalar_report("riesz_scaling_exponents", err, tolerance, ErrorMode::relative,
                                   "dilation exponents -alpha - (2k+1)/q and -(2k+1)/p");
  r.computed = {slope_I, slope_f};
  r.reference = {want_I, want_f};
  const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
  r.inputs = Json{{"alpha", alpha}, {"p", p}, {"q", q}, {"kappa", kappa},
                  {"scales", std::vector<double>(scales.begin(), scales.end())}};
  r.note = "norm ratio ||I f_s||_q / ||f_s||_p in [" + format_double(*mn) + ", " + format_double(*mx) +
           "], spread " + format_double(*mx / *mn - 1.0);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport riesz_semigroup_check(const Function1D& f, double kappa, double alpha, double beta, double tolerance) {
  Stopwatch sw;
  if (!(alpha + beta < 2.0 * kappa + 1.0)) {
    return skipped_report("riesz_semigroup", "alpha + beta must stay below 2 kappa + 1");
  }
  const RieszPotential Ia(kappa, alpha), Ib(kappa, beta), Iab(kappa, alpha + beta);
  const Function1D g = Ib.tabulate(f).as_function("I_beta f");
  const double m = decay_of(f, Ib.even_decay(), Ib.odd_decay());
  std::vector<double> computed, reference;
  for (double x : sample_points(f)) {
    computed.push_back(Ia(g, x, m));
    reference.push_back(Iab(f, x));
  }
  OperatorReport r = compare("riesz_semigroup", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "I_{alpha+beta} f computed directly");
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}, {"alpha", alpha}, {"beta", beta}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport laplacian_potential_identity_check(const Function1D& f, double kappa, double alpha, double tolerance) {
  Stopwatch sw;
  if (!(alpha >= 2.0 && alpha < 2.0 * kappa + 1.0)) {
    return skipped_report("laplacian_potential_identity",
                          "needs 2 <= alpha < 2 kappa + 1 (kappa = " + format_double(kappa) +
                              ", alpha = " + format_double(alpha) + ")");
  }
  const RieszPotential I(kappa, alpha), I2(kappa, alpha - 2.0);
  const LineProfile If = I.tabulate(f);
  const LineProfile pf = LineProfile::tabulate(f, f.parity(), layout_of(f));
  const auto pf_ptr = std::make_shared<const LineProfile>(pf);
  Function1D lap("laplacian", [pf_ptr, kappa](double x) { return pf_ptr->dunkl_laplacian(x, kappa); },
                 f.length_scale(), f.reach());
  lap.with_parity(f.parity());
  std::vector<double> a, b, c;
  for (double x : sample_points(f)) {
    a.push_back(If.dunkl_laplacian(x, kappa));
    b.push_back(I(lap, x));
    c.push_back(-I2(f, x));
  }
  double scale = 0.0, err = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    scale = std::max(scale, std::abs(c[i]));
    err = std::max({err, std::abs(a[i] - c[i]), std::abs(b[i] - c[i]), std::abs(a[i] - b[i])});
  }
  OperatorReport r = scalar_report("laplacian_potential_identity", err / scale, tolerance, ErrorMode::relative,
                                   "three-way: Delta I f, I Delta f, -I_{alpha-2} f");
  r.computed = a;
  r.computed.insert(r.computed.end(), b.begin(), b.end());
  r.reference = c;
  r.reference.insert(r.reference.end(), c.begin(), c.end());
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}, {"alpha", alpha}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bessel_transform_check(const BesselKernel& G, double tolerance) {
  Stopwatch sw;
  std::vector<double> computed, reference;
  for (double xi : {0.0, 0.25, 0.5, 1.0, 1.7, 2.5, 4.0, 6.0, 9.0}) {
    computed.push_back(G.transform_at(xi));
    reference.push_back(std::pow(1.0 + xi * xi, -0.5 * G.alpha()));
  }
  OperatorReport r = compare("bessel_kernel_transform", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::absolute, "multiplier (1 + xi^2)^{-alpha/2}");
  r.inputs = Json{{"kappa", G.kappa()}, {"alpha", G.alpha()}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bessel_mass_check(const BesselKernel& G, double tolerance) {
  Stopwatch sw;
  OperatorReport r = compare("bessel_kernel_mass", {G.mass()}, {1.0}, tolerance, ErrorMode::absolute,
                             "c_h int G h^2 = 1");
  r.inputs = Json{{"kappa", G.kappa()}, {"alpha", G.alpha()}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bessel_positivity_check(const BesselKernel& G) {
  Stopwatch sw;
  double worst = kInf;
  int bad = 0;
  const double lo = std::log(1e-6), hi = std::log(G.reach());
  for (int i = 0; i <= 2000; ++i) {
    const double v = G(std::exp(lo + (hi - lo) * i / 2000.0));
    worst = std::min(worst, v);
    if (!(v > 0.0)) ++bad;
  }
  OperatorReport r = scalar_report("bessel_kernel_positivity", static_cast<double>(bad), 0.0, ErrorMode::absolute,
                                   "G > 0 on a log grid over [1e-6, reach]");
  r.computed = {worst};
  r.inputs = Json{{"kappa", G.kappa()}, {"alpha", G.alpha()}};
  r.note = "minimum value " + format_double(worst);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bessel_slope_check(const BesselKernel& G, double tolerance, double r_lo, double r_hi) {
  Stopwatch sw;
  const double want = G.alpha() - 2.0 * G.kappa() - 1.0;
  std::vector<double> lr, lg;
  for (int i = 0; i <= 20; ++i) {
    const double r = r_lo * std::pow(r_hi / r_lo, i / 20.0);
    lr.push_back(std::log(r));
    lg.push_back(std::log(G(r)));
  }
  const double slope = fit_slope(lr, lg);
  OperatorReport r;
  if (!(want < 0.0)) {
    r = skipped_report("bessel_kernel_small_r_slope", "alpha >= 2 kappa + 1: G is bounded (or logarithmic) at 0");
  } else {
    r = scalar_report("bessel_kernel_small_r_slope", std::abs(slope - want) / std::abs(want), tolerance,
                      ErrorMode::relative, "exponent alpha - 2k - 1");
  }
  r.computed = {slope};
  r.reference = {want};
  r.inputs = Json{{"kappa", G.kappa()}, {"alpha", G.alpha()}, {"r_range", {r_lo, r_hi}}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bessel_decay_check(const BesselKernel& G, double tolerance) {
  Stopwatch sw;
  const double e = G.alpha() - 2.0 * G.kappa() - 1.0;
  auto ratio = [&](double r) { return G(r) / ((1.0 + std::pow(r, e)) * std::exp(-0.5 * r)); };
  auto sup_over = [&](double a, double b) {
    double s = 0.0;
    for (int i = 0; i <= 600; ++i) s = std::max(s, ratio(a * std::pow(b / a, i / 600.0)));
    return s;
  };
  const double fitted = sup_over(1e-3, 20.0);
  const double wide = std::max(sup_over(1e-5, 1e-3), sup_over(20.0, 200.0 < G.reach() ? 200.0 : G.reach()));
  OperatorReport r = scalar_report("bessel_kernel_decay_bound", std::max(0.0, wide / fitted - 1.0), tolerance,
                                   ErrorMode::relative, "constant fitted on [1e-3, 20] still bounds G on [1e-5, reach]");
  r.computed = {fitted, wide};
  r.inputs = Json{{"kappa", G.kappa()}, {"alpha", G.alpha()}};
  r.note = "fitted constant C = " + format_double(fitted);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bessel_semigroup_check(const Function1D& f, double kappa, double alpha, double beta, double tolerance) {
  Stopwatch sw;
  const BesselPotential Ja(kappa, alpha), Jb(kappa, beta), Jab(kappa, alpha + beta);
  const Function1D g = Jb.tabulate(f).as_function("J_beta f");
  std::vector<double> computed, reference;
  for (double x : sample_points(f)) {
    computed.push_back(Ja(g, x));
    reference.push_back(Jab(f, x));
  }
  OperatorReport r = compare("bessel_semigroup", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "J_{alpha+beta} f computed directly");
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}, {"alpha", alpha}, {"beta", beta}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport bessel_multiplier_check(const Function1D& f, double kappa, double alpha, double tolerance) {
  Stopwatch sw;
  auto grid = make_grid(kappa, 256, 12.0);
  const DunklTransform1D T(grid);
  const auto spectral = bessel_potential_spectral(SampledFunction::sample(f, grid), T, alpha);
  const BesselPotential J(kappa, alpha);
  std::vector<double> computed, reference;
  for (std::size_t i = grid->half(); i < grid->size(); i += 5) {
    const double x = grid->nodes()[i];
    if (std::abs(x) > 8.0) break;
    for (double sgn : {1.0, -1.0}) {
      if (sgn < 0.0 && f.parity() != Parity::none) continue;
      const std::size_t j = sgn > 0.0 ? i : grid->mirror(i);
      computed.push_back(J(f, sgn * x));
      reference.push_back(spectral.values[j].real());
    }
  }
  OperatorReport r = compare("bessel_potential_multiplier", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "spectral multiplier (1 + xi^2)^{-alpha/2} on the grid");
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}, {"alpha", alpha}};
  r.computed.clear();
  r.reference.clear();
  r.runtime_s = sw.seconds();
  return r;
}

}  // namespace dunkl
