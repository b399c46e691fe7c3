#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace dunkl {

const char* method_name(TranslationMethod m) {
  switch (m) {
    case TranslationMethod::explicit_1d: return "explicit_1d";
    case TranslationMethod::radial: return "radial";
    default: return "spectral";
  }
}

Translator::Translator(double kappa, RhoIntegralConfig cfg) : kappa_(kappa), b_(0.0), cfg_(cfg) {
  if (!(kappa >= 0.0)) throw std::domain_error("Translator: kappa must be nonnegative");
  if (kappa > 0.0) b_ = b_kappa(kappa);
}

double Translator::operator()(const Function1D& f, double x, double y) const {
  if (kappa_ == 0.0) return f(x - y);
  return apply([&f](double r) { return f.parts(r); }, x - y, x, y, f.reach(), f.breakpoints(),
               [&f](double r) { return f.length_scale_at(r); });
}

TranslationResult translate_1d(const Function1D& f, GridPtr grid, double y, const Translator& tr) {
  if (grid->kappa() != tr.kappa()) throw std::invalid_argument("translate_1d: grid and translator kappa differ");
  TranslationResult out;
  out.y = y;
  out.method = TranslationMethod::explicit_1d;
  out.values.resize(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = tr(f, grid->nodes()[i], y);
  out.grid = std::move(grid);
  return out;
}

Function1D interpolating_function(const SampledFunction& f, const std::string& name) {
  auto grid = f.grid;
  auto vals = std::make_shared<const std::vector<double>>(f.real_part());
  const double width = grid->cutoff() / static_cast<double>(grid->panels() / 2);
  // reach: first panel boundary past the last sample above the noise floor
  double sup = 0.0, last = 0.0;
  for (double v : *vals) sup = std::max(sup, std::abs(v));
  for (std::size_t i = 0; i < vals->size(); ++i) {
    if (std::abs((*vals)[i]) > 1e-17 * sup) last = std::max(last, std::abs(grid->nodes()[i]));
  }
  const double reach = std::min(grid->cutoff(), width * std::ceil(last / width + 1e-9));
  Function1D out(name, [grid, vals](double x) { return grid->interpolate(*vals, x); }, width / 2.0, reach);
  std::vector<double> breaks;
  for (std::size_t p = 1; p <= grid->panels() / 2 && width * static_cast<double>(p) < reach; ++p) {
    breaks.push_back(width * static_cast<double>(p));
  }
  out.with_breakpoints(std::move(breaks));
  if (f.parity != Parity::none) out.with_parity(f.parity);
  return out;
}

TranslationResult translate_1d(const SampledFunction& f, double y, const Translator& tr) {
  return translate_1d(interpolating_function(f), f.grid, y, tr);
}

double translate_radial(const std::function<double(double)>& f0, const MultiplicityParams& params,
                        std::span<const double> x, std::span<const double> y, int points) {
  if (x.size() != params.dim() || y.size() != params.dim()) throw std::invalid_argument("translate_radial: dimension mismatch");
  double nx2 = 0.0, ny2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    nx2 += x[i] * x[i];
    ny2 += y[i] * y[i];
  }
  auto composed = [&](std::span<const double> z) {
    double yz = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) yz += y[i] * z[i];
    return f0(std::sqrt(std::max(0.0, nx2 + ny2 - 2.0 * yz)));
  };
  return intertwine_z2d(composed, params, x, points);
}

double translate_radial_1d(const std::function<double(double)>& f0, double kappa, double x, double y, int points) {
  const double xs[1] = {x}, ys[1] = {y};
  return translate_radial(f0, MultiplicityParams::line(kappa), xs, ys, points);
}

TranslationResult translate_spectral(const SampledFunction& f, const DunklTransform1D& transform, double y) {
  SpectralFunction F = transform.forward(f);
  const double k = transform.kappa();
  for (std::size_t j = 0; j < F.size(); ++j) F.values[j] *= std::conj(dunkl_kernel_1d(k, y, F.grid->nodes()[j]));
  F.parity = y == 0.0 ? F.parity : Parity::none;
  TranslationResult out;
  out.grid = transform.space();
  out.values = transform.inverse(F).values;
  out.y = y;
  out.method = TranslationMethod::spectral;
  return out;
}

double gaussian_translate_closed_form(double kappa, double s, double x, double y) {
  const ScaledReal e = dunkl_kernel_real_1d(kappa, 2.0 * s * s * x, y);
  return e.mantissa * std::exp(e.log_scale - s * s * (x * x + y * y));
}

namespace {

// Symmetric grid wide enough for both translated integrands.
LineGrid pairing_grid(double kappa, double extent) {
  const double cutoff = std::clamp(extent, 4.0, 24.0);
  return LineGrid(kappa, 384, cutoff, 16);
}

}  // namespace

OperatorReport translation_duality_check(const Function1D& f, const Function1D& g, double kappa, double y,
                                         double tolerance) {
  Stopwatch sw;
  const Translator tr(kappa);
  const double extent = std::max(std::min(f.reach(), 20.0), std::min(g.reach(), 20.0)) + std::abs(y);
  const LineGrid grid = pairing_grid(kappa, extent);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double xi = grid.nodes()[i];
    lhs += grid.weights()[i] * tr(f, xi, y) * g(xi);
    rhs += grid.weights()[i] * f(xi) * tr(g, xi, -y);
  }
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  OperatorReport r = compare("translation_duality", {lhs}, {rhs}, tolerance, ErrorMode::relative,
                             "second code path: tau_{-y} applied to g", scale);
  r.inputs = Json{{"f", f.name()}, {"g", g.name()}, {"kappa", kappa}, {"y", y}};
  r.runtime_s = sw.seconds();
  return r;
}

OperatorReport support_check(const Function1D& f, double B, double kappa, double y, double tolerance) {
  Stopwatch sw;
  Function1D unbounded = f;
  unbounded.with_reach(std::numeric_limits<double>::infinity());
  const Translator tr(kappa);
  const double edge = B + std::abs(y);
  double outside = 0.0, inside = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double d = edge * (1e-3 + 0.05 * i);
    for (double sgn : {-1.0, 1.0}) {
      outside = std::max(outside, std::abs(tr(unbounded, sgn * (edge + d), y)));
      inside = std::max(inside, std::abs(tr(unbounded, sgn * (edge * (1.0 - 0.02 * i)), y)));
    }
  }
  OperatorReport r = compare("translation_support", {outside}, {0.0}, tolerance, ErrorMode::absolute,
                             "support property, closed form 0");
  r.inputs = Json{{"f", f.name()}, {"B", B}, {"kappa", kappa}, {"y", y}};
  r.note = "max |tau_y f| inside the predicted support: " + format_double(inside);
  r.runtime_s = sw.seconds();
  return r;
}

}  // namespace dunkl
