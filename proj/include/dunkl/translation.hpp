#pragma once

// Generalized translation tau_y: the explicit rank-one integral, the radial
// formula through the intertwining operator, and the spectral definition
// (tau_y f)^ = E(y, -i .) f^ as an independent route.

#include "dunkl/functions.hpp"
#include "dunkl/report.hpp"
#include "dunkl/rho_integral.hpp"
#include "dunkl/transform.hpp"

#include <span>

namespace dunkl {

enum class TranslationMethod { explicit_1d, radial, spectral };
const char* method_name(TranslationMethod m);

struct TranslationResult {
  GridPtr grid;
  std::vector<cplx> values;
  double y = 0.0;
  TranslationMethod method = TranslationMethod::explicit_1d;

  SampledFunction sampled() const { return SampledFunction{grid, values, Parity::none}; }
};

/// Rank-one tau_y f(x) = int [e(rho) + (x - y) q(rho)] Phi_k(t) dt with
/// rho^2 = x^2 + y^2 - 2xyt and f(+-r) = e(r) +- r q(r).
class Translator {
 public:
  explicit Translator(double kappa, RhoIntegralConfig cfg = {});

  double kappa() const { return kappa_; }
  const RhoIntegralConfig& config() const { return cfg_; }

  double operator()(const Function1D& f, double x, double y) const;

  /// Evaluates g(rho) = e(rho) + c q(rho) for a caller-supplied parts function.
  template <class Parts>
  double apply(Parts&& parts, double c, double x, double y, double reach, std::span<const double> breaks,
               const std::function<double(double)>& scale) const;

 private:
  double kappa_;
  double b_;
  RhoIntegralConfig cfg_;
};

/// tau_y f on the nodes of `grid`.
TranslationResult translate_1d(const Function1D& f, GridPtr grid, double y, const Translator& tr);
/// Sampled input: f is evaluated between nodes by the grid's barycentric interpolant.
TranslationResult translate_1d(const SampledFunction& f, double y, const Translator& tr);

/// Real part of a sampled function as an interpolating Function1D (zero beyond the cutoff).
Function1D interpolating_function(const SampledFunction& f, const std::string& name = "sampled");

/// Radial functions: tau_y f(x) = V_k[z -> f0(sqrt(|x|^2 + |y|^2 - 2 <y, z>))](x), Z_2^d.
double translate_radial(const std::function<double(double)>& f0, const MultiplicityParams& params,
                        std::span<const double> x, std::span<const double> y, int points = 48);
double translate_radial_1d(const std::function<double(double)>& f0, double kappa, double x, double y, int points = 48);

/// inverse(E(y, -i.) f^) on the transform's space grid.
TranslationResult translate_spectral(const SampledFunction& f, const DunklTransform1D& transform, double y);

/// e^{-s^2 (x^2 + y^2)} E(2 s^2 x, y), the translate of e^{-s^2 x^2}.
double gaussian_translate_closed_form(double kappa, double s, double x, double y);

/// int tau_y f g h^2 versus int f tau_{-y} g h^2.
OperatorReport translation_duality_check(const Function1D& f, const Function1D& g, double kappa, double y,
                                         double tolerance = 1e-7);

/// f vanishing for |x| > B: tau_y f must vanish for |x| > B + |y|. The reach of f is
/// dropped before translating so the vanishing is produced by the integral itself.
OperatorReport support_check(const Function1D& f, double B, double kappa, double y, double tolerance = 1e-7);

template <class Parts>
double Translator::apply(Parts&& parts, double c, double x, double y, double reach, std::span<const double> breaks,
                         const std::function<double(double)>& scale) const {
  const double A = x * x + y * y;
  const double B = 2.0 * x * y;
  auto g = [&](double rho) {
    const RadialParts p = parts(rho);
    return p.even + c * p.odd_over_r;
  };
  if (B == 0.0) {
    const double rho = std::sqrt(A);
    return rho > reach ? 0.0 : g(rho);
  }
  return b_ * rho_integral(A, B, kappa_ - 1.0, kappa_, g, scale, reach, breaks, cfg_);
}

}  // namespace dunkl
