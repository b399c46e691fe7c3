#include "dunkl/riesz.hpp"

#include "kernel_integral.hpp"

#include "dunkl/norms.hpp"
#include "dunkl/rho_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

using namespace detail;

std::vector<double> sample_points(const Function1D& f) {
  const double l = f.length_scale();
  std::vector<double> xs{0.3 * l, 0.9 * l, 1.7 * l, 3.1 * l};
  if (f.parity() == Parity::none) {
    for (double x : {-0.5 * l, -1.3 * l, -2.6 * l}) xs.push_back(x);
  }
  return xs;
}

// value at 0 of the interpolating polynomial through (x_i, v_i)
double extrapolate_to_zero(std::vector<double> x, std::vector<double> v) {
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      v[i] = (x[i + m] * v[i] - x[i] * v[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return v[0];
}

bool integral_dimension(double kappa, int& m) {
  const double twice = 2.0 * kappa;
  if (std::abs(twice - std::round(twice)) > 1e-12) return false;
  m = static_cast<int>(std::round(twice)) + 1;
  return m >= 2;
}

void check_dimension(int m, const char* who) {
  if (m < 2) throw std::domain_error(std::string(who) + ": dimension m must be at least 2");
}

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << format_double(v[i]);
  return os.str();
}

}  // namespace

void PrincipalValueConfig::validate() const {
  if (ladder.empty()) throw std::invalid_argument("principal value: empty epsilon ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > 0.0)) throw std::invalid_argument("principal value: ladder entries must be positive");
    if (i > 0 && !(ladder[i] < ladder[i - 1])) {
      throw std::invalid_argument("principal value: ladder must be strictly decreasing");
    }
  }
}

Parity flip_parity(Parity p) {
  if (p == Parity::even) return Parity::odd;
  if (p == Parity::odd) return Parity::even;
  return Parity::none;
}

// ---- transform -----------------------------------------------------------------

RieszTransform::RieszTransform(double kappa, PrincipalValueConfig cfg)
    : kappa_(kappa), c_(0.0), cfg_(std::move(cfg)), tr_(kappa, cfg_.quadrature.translation) {
  if (!(kappa >= 0.0)) throw std::domain_error("Riesz transform: kappa must be nonnegative");
  cfg_.validate();
  c_ = Constants(MultiplicityParams::line(kappa)).riesz_constant();
}

double RieszTransform::antisymmetrized(const Function1D& f, double x, double eps, TailExponent tail) const {
  KernelSpec k{0.0};
  k.tail = 1.0;
  k.sign = -1.0;
  k.y_min = eps;
  return c_ * kernel_integral(tr_, f, x, k, [](double y) { return 1.0 / y; }, tail, cfg_.quadrature);
}

double RieszTransform::operator()(const Function1D& f, double x, TailExponent tail) const {
  if (cfg_.pairing == PvPairing::antisymmetrized) return antisymmetrized(f, x, 0.0, tail);
  return extrapolate_to_zero(cfg_.ladder, ladder_values(f, x, tail));
}

double RieszTransform::truncated(const Function1D& f, double x, double eps, TailExponent tail) const {
  if (!(eps > 0.0)) throw std::invalid_argument("Riesz transform: truncation radius must be positive");
  return antisymmetrized(f, x, eps, tail);
}

std::vector<double> RieszTransform::ladder_values(const Function1D& f, double x, TailExponent tail) const {
  std::vector<double> out;
  for (double e : cfg_.ladder) out.push_back(antisymmetrized(f, x, e, tail));
  return out;
}

SampledFunction RieszTransform::on_grid(const Function1D& f, GridPtr grid, TailExponent tail) const {
  const Parity out_parity = flip_parity(f.parity());
  SampledFunction out{grid, std::vector<cplx>(grid->size()), out_parity};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    if (out_parity != Parity::none && i < grid->half()) continue;
    const double v = (*this)(f, grid->nodes()[i], tail);
    out.values[i] = v;
    if (out_parity != Parity::none) out.values[grid->mirror(i)] = out_parity == Parity::even ? v : -v;
  }
  return out;
}

LineProfile RieszTransform::tabulate(const Function1D& f, TailExponent tail) const {
  ProfileLayout layout;
  layout.scale = f.length_scale();
  return LineProfile::tabulate([&](double x) { return (*this)(f, x, tail); }, flip_parity(f.parity()), layout,
                               even_decay(), odd_decay() + 1.0);
}

SampledFunction riesz_transform_1d(const SampledFunction& f, const PrincipalValueConfig& cfg) {
  cfg.validate();
  const auto& nodes = f.grid->nodes();
  if (cfg.pairing == PvPairing::ladder_limit) {
    const double spacing = (nodes.back() - nodes.front()) / static_cast<double>(nodes.size());
    if (!(cfg.ladder.back() < 0.25 * spacing)) {
      throw std::invalid_argument("principal value: the ladder must reach below a quarter of the grid spacing");
    }
  }
  const RieszTransform R(f.kappa(), cfg);
  return R.on_grid(interpolating_function(f), f.grid);
}

SampledFunction riesz_multiplier_route(const SampledFunction& f, const DunklTransform1D& transform) {
  auto out = transform.apply_multiplier(f, [](double y) { return cplx(0.0, y > 0.0 ? -1.0 : (y < 0.0 ? 1.0 : 0.0)); });
  out.parity = flip_parity(f.parity);
  return out;
}

// ---- odd decomposition -----------------------------------------------------------

Function1D divide_by_x(const Function1D& f) {
  if (f.parity() != Parity::odd) {
    const double l = f.length_scale();
    double defect = 0.0, mag = 0.0;
    for (double x : {0.1 * l, 0.7 * l, 1.9 * l, 4.3 * l}) {
      defect = std::max(defect, std::abs(f(x) + f(-x)));
      mag = std::max(mag, std::abs(f(x)));
    }
    if (defect > 1e-12 * mag) throw std::invalid_argument("odd decomposition: " + f.name() + " is not odd");
  }
  const double d0 = f.derivative(0.0);
  Function1D g(f.name() + "/x",
               [f, d0](double x) {
                 const double r = std::abs(x);
                 return r == 0.0 ? d0 : f.parts(r).odd_over_r;
               },
               f.length_scale(), f.reach());
  g.with_parity(Parity::even).with_breakpoints(f.breakpoints()).with_scale_growth(f.scale_growth());
  g.with_parts([f, d0](double r) { return RadialParts{r == 0.0 ? d0 : f.parts(r).odd_over_r, 0.0}; });
  return g;
}

std::pair<double, double> odd_decomposition(const Function1D& f, double kappa, double s,
                                            const PrincipalValueConfig& cfg) {
  const Function1D g = divide_by_x(f);
  const Translator tr(kappa, cfg.quadrature.translation);
  KernelSpec k1{0.0};
  k1.tail = 1.0;
  k1.sign = -1.0;
  const double r1 = s * kernel_integral(tr, g, s, k1, [](double y) { return 1.0 / y; }, std::nullopt, cfg.quadrature);
  const KernelSpec k2{0.0};
  const double r2 = kernel_integral(tr, g, s, k2, [](double) { return 1.0; }, std::nullopt, cfg.quadrature);
  return {r1, r2};
}

std::pair<SampledFunction, SampledFunction> odd_decomposition(const SampledFunction& f,
                                                              const PrincipalValueConfig& cfg) {
  const Function1D fi = interpolating_function(f);
  const auto& grid = f.grid;
  SampledFunction a{grid, std::vector<cplx>(grid->size()), Parity::even};
  SampledFunction b{grid, std::vector<cplx>(grid->size()), Parity::even};
  for (std::size_t i = grid->half(); i < grid->size(); ++i) {
    const auto [r1, r2] = odd_decomposition(fi, f.kappa(), grid->nodes()[i], cfg);
    a.values[i] = a.values[grid->mirror(i)] = r1;
    b.values[i] = b.values[grid->mirror(i)] = r2;
  }
  return {a, b};
}

// ---- classical radial maps ---------------------------------------------------------

namespace {

// int_0^inf ds w(s) int_{-1}^{1} f0(rho(t)) [t] (1-t^2)^{(m-3)/2} dt, rho^2 = x^2 + s^2 - 2 x s t
template <class W>
double radial_double_integral(const Function1D& f0, int m, double x, bool with_t, W&& w, const RhoIntegralConfig& cfg) {
  const double ell = f0.length_scale();
  const double reach = std::isfinite(f0.reach()) ? f0.reach() : 40.0 * ell;
  const double a = 0.5 * (m - 3.0);
  auto scale = [&](double r) { return f0.length_scale_at(r); };
  const auto& fb = f0.breakpoints();
  auto inner = [&](double s) {
    const double A = x * x + s * s, B = 2.0 * x * s;
    if (with_t) {
      return rho_integral(A, B, a, a, [&](double r) { return f0(r) * (A - r * r) / B; }, scale, reach, fb, cfg);
    }
    return rho_integral(A, B, a, a, [&](double r) { return f0(r); }, scale, reach, fb, cfg);
  };
  const double S = x + reach;
  std::vector<double> breaks{0.0, S};
  if (x > 0.0 && x < S) breaks.push_back(x);
  if (x - reach > 0.0) breaks.push_back(x - reach);
  for (double b : fb) {
    for (double c : {x - b, x + b, b - x}) {
      if (c > 0.0 && c < S) breaks.push_back(c);
    }
  }
  sort_unique(breaks);
  const auto panels = refine(breaks, [&](double s) { return f0.length_scale_at(std::abs(s - x)); });
  const QuadratureRule& gl = cached_gauss_legendre(20);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < panels.size(); ++k) {
    const double lo = panels[k], hi = panels[k + 1];
    if (hi <= x - reach) continue;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double s = mid + half * gl.nodes[i];
      total += half * gl.weights[i] * w(s) * inner(s);
    }
  }
  return total;
}

}  // namespace

double classical_radial_riesz(const Function1D& f0, int m, double rho, const RhoIntegralConfig& cfg) {
  check_dimension(m, "classical_radial_riesz");
  rho = std::abs(rho);
  // the inner integral is odd in t when rho = 0
  if (rho == 0.0) return 0.0;
  return radial_double_integral(f0, m, rho, true, [](double s) { return 1.0 / s; }, cfg);
}

double classical_k1_convolution(const Function1D& g0, int m, double rho, const RhoIntegralConfig& cfg) {
  check_dimension(m, "classical_k1_convolution");
  rho = std::abs(rho);
  return radial_double_integral(g0, m, rho, false, [](double) { return 1.0; }, cfg);
}

double fit_constant(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("fit_constant: size mismatch");
  double ab = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    bb += b[i] * b[i];
  }
  if (bb == 0.0) throw std::invalid_argument("fit_constant: reference vanishes");
  return ab / bb;
}

// ---- checks -------------------------------------------------------------------

OperatorReport riesz_transform_multiplier_check(const Function1D& f, double kappa, double tolerance) {
  Stopwatch sw;
  auto grid = make_grid(kappa, 256, 12.0);
  const DunklTransform1D T(grid);
  const auto spectral = riesz_multiplier_route(SampledFunction::sample(f, grid), T);
  const RieszTransform R(kappa);
  std::vector<double> computed, reference;
  double imag = 0.0;
  for (std::size_t i = grid->half(); i < grid->size(); i += 5) {
    const double x = grid->nodes()[i];
    if (std::abs(x) > 8.0) break;
    for (double sgn : {1.0, -1.0}) {
      const std::size_t j = sgn > 0.0 ? i : grid->mirror(i);
      computed.push_back(R(f, sgn * x));
      reference.push_back(spectral.values[j].real());
      imag = std::max(imag, std::abs(spectral.values[j].imag()));
    }
  }
  OperatorReport r = compare("riesz_transform_multiplier", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "inverse transform of -i sign(xi) f^ on the grid");
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}};
  r.note = "max |imaginary part| of the multiplier route " + format_double(imag);
  r.computed.clear();
  r.reference.clear();
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport riesz_square_check(const Function1D& f, double kappa, double tolerance) {
  Stopwatch sw;
  const RieszTransform R(kappa);
  const LineProfile Rf = R.tabulate(f);
  const Function1D F = Rf.as_function("R " + f.name());
  const double tail = F.parity() == Parity::even ? R.even_decay() : R.odd_decay();
  std::vector<double> computed, reference;
  for (double x : sample_points(f)) {
    computed.push_back(R(F, x, tail));
    reference.push_back(-f(x));
  }
  OperatorReport r = compare("riesz_square_is_minus_identity", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "(-i sign)^2 = -1");
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport riesz_parity_check(const Function1D& f, double kappa, double tolerance) {
  if (f.parity() == Parity::none) return skipped_report("riesz_parity_exchange", "input has no parity");
  Stopwatch sw;
  const RieszTransform R(kappa);
  const double sigma = f.parity() == Parity::even ? -1.0 : 1.0;  // parity of R f
  double defect = 0.0, mag = 0.0;
  for (double x : sample_points(f)) {
    const double a = R(f, x), b = R(f, -x);
    defect = std::max(defect, std::abs(a - sigma * b));
    mag = std::max({mag, std::abs(a), std::abs(b)});
  }
  OperatorReport r = scalar_report("riesz_parity_exchange", defect / mag, tolerance, ErrorMode::relative,
                                   "even <-> odd under the odd multiplier");
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}, {"input_parity", parity_name(f.parity())}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport odd_decomposition_check(const Function1D& f, double kappa, double tolerance) {
  Stopwatch sw;
  const RieszTransform R(kappa);
  const Function1D g = divide_by_x(f);
  const Translator tr(kappa);
  std::vector<double> computed, reference;
  double even_defect = 0.0, mag = 0.0;
  for (double s : sample_points(f)) {
    const auto [r1, r2] = odd_decomposition(f, kappa, s);
    const auto [m1, m2] = odd_decomposition(f, kappa, -s);
    computed.push_back(R.constant() * (r1 - r2));
    reference.push_back(R(f, s));
    even_defect = std::max({even_defect, std::abs(r1 - m1), std::abs(r2 - m2)});
    mag = std::max({mag, std::abs(r1), std::abs(r2)});
  }
  // tau_r f(s) = (s - r) tau_r g(s)
  double id_defect = 0.0, id_mag = 0.0;
  const double l = f.length_scale();
  for (double s : {-1.1 * l, 0.4 * l, 2.0 * l}) {
    for (double r : {-0.7 * l, 0.3 * l, 1.5 * l}) {
      const double a = tr(f, s, r), b = (s - r) * tr(g, s, r);
      id_defect = std::max(id_defect, std::abs(a - b));
      id_mag = std::max(id_mag, std::abs(a));
    }
  }
  OperatorReport r = compare("riesz_odd_decomposition", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "recombination C_R (R1 - R2) against the PV route");
  const double ev = even_defect / mag, id = id_defect / id_mag;
  r.rel_error = std::max({r.rel_error, ev, id});
  r.finalize();
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}};
  r.note = "R1/R2 evenness defect " + format_double(ev) + ", translation identity defect " + format_double(id);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport radial_reduction_check(std::span<const Function1D> fs, double kappa, double tolerance) {
  int m = 0;
  if (!integral_dimension(kappa, m)) {
    return skipped_report("riesz_radial_reduction", "2 kappa + 1 is not an integer dimension >= 2");
  }
  if (fs.empty()) throw std::invalid_argument("radial_reduction_check: empty family");
  Stopwatch sw;
  const RieszTransform R(kappa);
  std::vector<double> computed, reference;
  double c = 0.0;
  std::vector<double> per_function;
  for (std::size_t n = 0; n < fs.size(); ++n) {
    const Function1D& f = fs[n];
    if (f.parity() != Parity::even) throw std::invalid_argument("radial_reduction_check: " + f.name() + " is not even");
    std::vector<double> a, b;
    const double l = f.length_scale();
    for (double x : {0.3 * l, 0.9 * l, 1.7 * l, 3.1 * l, -1.2 * l}) {
      a.push_back(R(f, x));
      b.push_back((x > 0.0 ? 1.0 : -1.0) * classical_radial_riesz(f, m, std::abs(x)));
    }
    if (n == 0) c = fit_constant(a, b);  // calibration, frozen afterwards
    double res = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      computed.push_back(a[i]);
      reference.push_back(c * b[i]);
      res = std::max(res, std::abs(a[i] - c * b[i]));
      mag = std::max(mag, std::abs(a[i]));
    }
    per_function.push_back(res / mag);
  }
  OperatorReport r = compare("riesz_radial_reduction", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "classical radial Riesz profile on R^m, constant fitted once");
  r.rel_error = *std::max_element(per_function.begin(), per_function.end());
  r.finalize();
  const Constants C(MultiplicityParams::line(kappa));
  r.inputs = Json{{"kappa", kappa}, {"m", m}, {"calibration", fs[0].name()}};
  r.note = "fitted c = " + format_double(c) + " (2 C_R b_k = " + format_double(2.0 * C.riesz_constant() * C.b_kappa()) +
           "), residuals " + join(per_function);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport k1_identification_check(std::span<const Function1D> odd_fs, double kappa, double tolerance) {
  int m = 0;
  if (!integral_dimension(kappa, m)) {
    return skipped_report("riesz_k1_identification", "2 kappa + 1 is not an integer dimension >= 2");
  }
  if (odd_fs.empty()) throw std::invalid_argument("k1_identification_check: empty family");
  Stopwatch sw;
  std::vector<double> computed, reference, per_function;
  double c = 0.0;
  for (std::size_t n = 0; n < odd_fs.size(); ++n) {
    const Function1D& f = odd_fs[n];
    const Function1D g = divide_by_x(f);
    std::vector<double> a, b;
    for (double s : sample_points(f)) {
      a.push_back(odd_decomposition(f, kappa, s).second);
      b.push_back(classical_k1_convolution(g, m, s));
    }
    if (n == 0) c = fit_constant(a, b);
    double res = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      computed.push_back(a[i]);
      reference.push_back(c * b[i]);
      res = std::max(res, std::abs(a[i] - c * b[i]));
      mag = std::max(mag, std::abs(a[i]));
    }
    per_function.push_back(res / mag);
  }
  OperatorReport r = compare("riesz_k1_identification", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "classical F * |y|^{1-m} profile, constant fitted once");
  r.rel_error = *std::max_element(per_function.begin(), per_function.end());
  r.finalize();
  r.inputs = Json{{"kappa", kappa}, {"m", m}, {"calibration", odd_fs[0].name()}};
  r.note = "fitted c = " + format_double(c) + " (2 b_k = " + format_double(2.0 * b_kappa(kappa)) + "), residuals " +
           join(per_function);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport general_multiplier_check(int n, const Function1D& f, double kappa, double tolerance) {
  if (n == 0) {
    return skipped_report("general_multiplier_n0",
                          "out of range: d_{0,k} contains Gamma(0); the singular-integral multiplier needs n >= 1");
  }
  if (n != 1) throw std::invalid_argument("general_multiplier_check: rank one supports n in {0, 1}");
  Stopwatch sw;
  const Constants C(MultiplicityParams::line(kappa));
  const cplx d = C.d_n_kappa(1);
  auto grid = make_grid(kappa, 256, 12.0);
  const DunklTransform1D T(grid);
  const auto spectral = T.apply_multiplier(SampledFunction::sample(f, grid),
                                           [d](double y) { return d * (y > 0.0 ? 1.0 : (y < 0.0 ? -1.0 : 0.0)); });
  // c_h int tau_y f(x) y |y|^{-2k-2} |y|^{2k} dy = (c_h / C_R) R f(x)
  const RieszTransform R(kappa);
  const double factor = C.c_h() / R.constant();
  std::vector<double> computed, reference;
  for (std::size_t i = grid->half(); i < grid->size(); i += 7) {
    const double x = grid->nodes()[i];
    if (std::abs(x) > 8.0) break;
    for (double sgn : {1.0, -1.0}) {
      const std::size_t j = sgn > 0.0 ? i : grid->mirror(i);
      computed.push_back(factor * R(f, sgn * x));
      reference.push_back(spectral.values[j].real());
    }
  }
  OperatorReport r = compare("general_multiplier_n1", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::relative, "multiplier d_{1,k} sign(xi) on the grid");
  r.inputs = Json{{"n", n}, {"f", f.name()}, {"kappa", kappa}};
  r.note = "d_{1,k} = " + format_double(d.real()) + " + " + format_double(d.imag()) + " i";
  r.computed.clear();
  r.reference.clear();
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport ladder_check(const Function1D& f, double kappa, double x, const PrincipalValueConfig& cfg,
                            double tolerance) {
  Stopwatch sw;
  PrincipalValueConfig anti = cfg;
  anti.pairing = PvPairing::antisymmetrized;
  const RieszTransform R(kappa, anti);
  const auto vals = R.ladder_values(f, x);
  const double limit = extrapolate_to_zero(cfg.ladder, vals);
  const double exact = R(f, x);
  std::vector<double> diffs;
  bool cauchy = true;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    diffs.push_back(std::abs(vals[i + 1] - vals[i]));
    if (i > 0 && !(diffs[i] < diffs[i - 1])) cauchy = false;
  }
  OperatorReport r = compare("riesz_epsilon_ladder", {limit}, {exact}, tolerance, ErrorMode::relative,
                             "antisymmetrized principal value");
  if (!cauchy) r.pass = false;
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}, {"x", x}, {"ladder", cfg.ladder}};
  r.note = std::string(cauchy ? "" : "ladder differences not decreasing; ") + "differences " + join(diffs);
  r.runtime_s = sw.seconds();
  return r;
}

std::vector<OperatorReport> riesz_lp_ratio_check(std::span<const Function1D> fs, double kappa, std::span<const double> ps,
                                                 double bound) {
  for (double p : ps) {
    if (!(p > 1.0)) throw std::domain_error("riesz_lp_ratio_check: p must exceed 1");
  }
  Stopwatch sw;
  const RieszTransform R(kappa);
  std::vector<std::vector<double>> ratios(ps.size());
  for (const Function1D& f : fs) {
    const LineProfile Rf = R.tabulate(f);
    NormLayout layout;
    layout.scale = f.length_scale();
    layout.extent = std::min(f.reach(), 20.0 * f.length_scale());
    for (std::size_t j = 0; j < ps.size(); ++j) {
      const double num = Rf.lp_norm(ps[j], kappa);
      ratios[j].push_back(num / line_lp_norm([&](double x) { return f(x); }, kappa, ps[j], layout, f.parity()));
    }
  }
  std::vector<OperatorReport> out;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const double worst = *std::max_element(ratios[j].begin(), ratios[j].end());
    OperatorReport r = scalar_report("riesz_lp_ratio", worst, bound, ErrorMode::absolute,
                                     "empirical bound on ||R f||_p / ||f||_p");
    r.computed = ratios[j];
    r.inputs = Json{{"kappa", kappa}, {"p", ps[j]}, {"functions", static_cast<int>(fs.size())}};
    r.note = "p = " + format_double(ps[j]) + ", ratios in [" +
             format_double(*std::min_element(ratios[j].begin(), ratios[j].end())) + ", " + format_double(worst) + "]";
    r.runtime_s = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dunkl
