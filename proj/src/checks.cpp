#include "dunkl/checks.hpp"

#include "dunkl/convolution.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/potentials.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

std::vector<Function1D> schwartz_family() {
  using namespace families;
  std::vector<Function1D> out;
  for (double s : {0.5, 0.8, 1.0, 1.25}) out.push_back(gaussian(s));
  for (double s : {0.6, 1.0, 1.2}) out.push_back(odd_gaussian(s));
  for (int n = 0; n <= 5; ++n) out.push_back(hermite_gaussian(n, 1.0));
  for (double c : {0.5, -1.0, 2.0}) out.push_back(shifted_gaussian(c, 1.0));
  for (double w : {1.0, 2.5}) out.push_back(modulated_gaussian(w, 1.0));
  for (int n : {2, 4}) out.push_back(monomial_gaussian(n, 1.0));
  return out;
}

OperatorReport plancherel_inversion_check(std::span<const Function1D> fs, double kappa, int grid_n, double cutoff,
                                          double tolerance) {
  Stopwatch sw;
  auto grid = make_grid(kappa, grid_n, cutoff);
  const DunklTransform1D T(grid);
  double plancherel = 0.0, inversion = 0.0;
  for (const Function1D& f : fs) {
    const auto s = SampledFunction::sample(f, grid);
    const auto F = T.forward(s);
    const double n = plancherel_norm(s);
    plancherel = std::max(plancherel, std::abs(plancherel_norm(F) - n) / n);
    inversion = std::max(inversion, max_abs_diff(T.inverse(F), s) / s.sup_norm());
  }
  OperatorReport r = scalar_report("plancherel_inversion", std::max(plancherel, inversion), tolerance,
                                   ErrorMode::relative, "||f^||_2 = ||f||_2 and the inverse transform");
  r.computed = {plancherel, inversion};
  r.inputs = Json{{"kappa", kappa}, {"functions", static_cast<int>(fs.size())}, {"grid_n", grid_n}, {"cutoff", cutoff}};
  r.note = "Plancherel " + format_double(plancherel) + ", round trip " + format_double(inversion);
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport eigenfunction_check(int n, double kappa, int grid_n, double cutoff, double tolerance) {
  if (n != 0 && n != 1) throw std::invalid_argument("eigenfunction_check: n must be 0 or 1");
  Stopwatch sw;
  auto grid = make_grid(kappa, grid_n, cutoff);
  const DunklTransform1D T(grid);
  auto P = [n](double x) { return n == 0 ? 1.0 : x; };
  const auto f = SampledFunction::sample([&](double x) { return cplx(P(x) * std::exp(-0.5 * x * x)); }, grid,
                                         n == 0 ? Parity::even : Parity::odd);
  const auto F = T.forward(f);
  const cplx phase = n == 0 ? cplx(1.0) : cplx(0.0, -1.0);
  double err = 0.0;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double y = grid->nodes()[i];
    err = std::max(err, std::abs(F.values[i] - phase * P(y) * std::exp(-0.5 * y * y)));
  }
  OperatorReport r = scalar_report("gaussian_eigenfunction_n" + std::to_string(n), err, tolerance,
                                   ErrorMode::absolute, "(P_n e^{-x^2/2})^ = (-i)^n P_n e^{-xi^2/2}");
  r.inputs = Json{{"n", n}, {"kappa", kappa}, {"grid_n", grid_n}, {"cutoff", cutoff}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport translation_routes_check(const Function1D& f, double kappa, double y, double tolerance) {
  Stopwatch sw;
  auto grid = make_grid(kappa, 256, 12.0);
  const DunklTransform1D T(grid);
  const Translator tr(kappa);
  const auto spectral = translate_spectral(SampledFunction::sample(f, grid), T, y);
  const auto explicit_ = translate_1d(f, grid, y, tr);
  const bool radial = f.parity() == Parity::even;
  double es = 0.0, er = 0.0, rs = 0.0;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double x = grid->nodes()[i];
    if (std::abs(x) > 6.0) continue;
    const cplx e = explicit_.values[i], s = spectral.values[i];
    es = std::max(es, std::abs(e - s));
    if (radial && i % 4 == 0) {
      const double r = translate_radial_1d([&](double t) { return f(t); }, kappa, x, y, 96);
      er = std::max(er, std::abs(e - r));
      rs = std::max(rs, std::abs(r - s));
    }
  }
  double sup = 0.0;
  for (double x : grid->nodes()) sup = std::max(sup, std::abs(f(x)));
  OperatorReport r = scalar_report("translation_routes", std::max({es, er, rs}) / sup, tolerance, ErrorMode::relative,
                                   "explicit rank-one formula, spectral route, radial formula");
  r.computed = {es / sup, er / sup, rs / sup};
  r.inputs = Json{{"f", f.name()}, {"kappa", kappa}, {"y", y}, {"radial", radial}};
  r.note = "explicit-spectral " + format_double(es / sup) +
           (radial ? ", explicit-radial " + format_double(er / sup) + ", radial-spectral " + format_double(rs / sup)
                   : std::string(", radial route needs an even input"));
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport gaussian_translate_check(double kappa, double s, double tolerance) {
  Stopwatch sw;
  const Translator tr(kappa);
  const auto g = families::gaussian(s);
  std::vector<double> computed, reference;
  for (double x : {-2.5, -0.4, 0.0, 0.9, 3.0}) {
    for (double y : {-1.2, 0.7, 2.0}) {
      computed.push_back(tr(g, x / s, y / s));
      reference.push_back(gaussian_translate_closed_form(kappa, s, x / s, y / s));
    }
  }
  OperatorReport r = compare("gaussian_translate_closed_form", std::move(computed), std::move(reference), tolerance,
                             ErrorMode::absolute, "e^{-s^2 (x^2 + y^2)} E(2 s^2 x, y)");
  r.inputs = Json{{"kappa", kappa}, {"s", s}};
  r.computed.clear();
  r.reference.clear();
  r.runtime_s = sw.seconds();
  return r;
}

// ---- norm ratios ---------------------------------------------------------------

const char* operator_name(NormedOperator op) {
  switch (op) {
    case NormedOperator::maximal: return "maximal";
    case NormedOperator::riesz_potential: return "riesz_potential";
    case NormedOperator::bessel_potential: return "bessel_potential";
    case NormedOperator::riesz_transform: return "riesz_transform";
  }
  return "?";
}

std::vector<Function1D> boundedness_family() {
  using namespace families;
  return {gaussian(1.0),
          odd_gaussian(1.0),
          hermite_gaussian(2, 1.0),
          hermite_gaussian(3, 1.0),
          shifted_gaussian(0.5, 1.0),
          shifted_gaussian(-1.0, 1.5),
          modulated_gaussian(1.5, 1.0),
          bump(1.0),
          monomial_gaussian(2, 1.0),
          monomial_gaussian(3, 1.0)};
}

std::vector<Function1D> dilation_family() {
  std::vector<Function1D> out;
  for (int e = -3; e <= 3; ++e) {
    const double s = std::ldexp(1.0, e);
    out.push_back(families::gaussian(s));
    out.push_back(families::odd_gaussian(s));
  }
  return out;
}

OperatorReport norm_ratio_check(const NormRatioSpec& spec, std::span<const Function1D> fs) {
  if (fs.empty()) throw std::invalid_argument("norm_ratio_check: empty family");
  if (!(spec.p > 1.0)) throw std::domain_error("norm_ratio_check: p must exceed 1");
  Stopwatch sw;
  const double k = spec.kappa;
  double q = spec.p;
  if (spec.op == NormedOperator::riesz_potential) {
    const double inv_q = 1.0 / spec.p - spec.alpha / (2.0 * k + 1.0);
    if (!(inv_q > 0.0)) throw std::domain_error("norm_ratio_check: 1/p must exceed alpha/(2 kappa + 1)");
    q = 1.0 / inv_q;
  }
  std::vector<double> ratios;
  for (const Function1D& f : fs) {
    NormLayout layout;
    layout.scale = f.length_scale();
    layout.extent = std::min(f.reach(), 20.0 * f.length_scale());
    const double nf = line_lp_norm([&](double x) { return f(x); }, k, spec.p, layout, f.parity());
    double nt = 0.0;
    switch (spec.op) {
      case NormedOperator::maximal: {
        const std::vector<double> ps{spec.p};
        nt = maximal_lp_norms(f, k, ps, default_radii(f))[0];
        break;
      }
      case NormedOperator::riesz_potential:
        nt = RieszPotential(k, spec.alpha).tabulate(f).lp_norm(q, k);
        break;
      case NormedOperator::bessel_potential:
        nt = BesselPotential(k, spec.alpha).tabulate(f).lp_norm(q, k);
        break;
      case NormedOperator::riesz_transform:
        nt = RieszTransform(k).tabulate(f).lp_norm(q, k);
        break;
    }
    ratios.push_back(nt / nf);
  }
  const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
  OperatorReport r = scalar_report(std::string("norm_ratio_") + operator_name(spec.op), *mx, spec.bound,
                                   ErrorMode::absolute, "empirical operator-norm bound");
  r.computed = ratios;
  r.inputs = Json{{"operator", operator_name(spec.op)}, {"kappa", k}, {"p", spec.p}, {"q", q},
                  {"functions", static_cast<int>(fs.size())}};
  if (spec.op == NormedOperator::riesz_potential || spec.op == NormedOperator::bessel_potential) {
    r.inputs["alpha"] = spec.alpha;
  }
  r.note = "ratios in [" + format_double(*mn) + ", " + format_double(*mx) + "]";
  r.runtime_s = sw.seconds();
  return r;
}

}  // namespace dunkl
