#pragma once

// Rank-one Dunkl convolution, dilations, the maximal function and the
// approximate-identity and Young-type checks built on them.

#include "dunkl/functions.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/report.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"

#include <span>
#include <vector>

namespace dunkl {

struct ConvolutionConfig {
  int points = 16;
  double panel_scale = 1.5;  // outer panel width in units of the smaller length scale
  double max_extent = 40.0;
  RhoIntegralConfig translation{};
};

/// f *_k g (x) = c_h int f(y) tau_x g^v(y) |y|^{2k} dy = c_h int g(y) tau_y f(x) |y|^{2k} dy.
/// The function with the shorter reach is integrated against the translate of the other.
class Convolver {
 public:
  explicit Convolver(double kappa, ConvolutionConfig cfg = {});

  double kappa() const { return kappa_; }
  double operator()(const Function1D& f, const Function1D& g, double x) const;
  SampledFunction on_grid(const Function1D& f, const Function1D& g, GridPtr grid) const;
  /// Sampled inputs are read through their grid interpolants (real parts).
  SampledFunction on_grid(const SampledFunction& f, const SampledFunction& g) const;

  /// Symmetric outer rule on [-E, E] (weights include c_h |y|^{2k}) for an outer function.
  void outer_rule(const Function1D& outer, double inner_scale, std::vector<double>& nodes,
                  std::vector<double>& weights) const;

 private:
  double kappa_;
  double c_h_;
  ConvolutionConfig cfg_;
  Translator tr_;
};

/// phi_eps(x) = eps^{-(2k+1)} phi(x / eps).
Function1D dilate(const Function1D& phi, double kappa, double eps);
SampledFunction dilate(const SampledFunction& phi, double eps);

/// (int f h^2)-type mass c_h int f |x|^{2k} dx of a Function1D, i.e. f^(0).
double transform_at_zero(const Function1D& f, double kappa);

// ---- maximal function --------------------------------------------------

struct MaximalConfig {
  int points = 10;       // Gauss-Legendre nodes per panel
  int grading = 6;       // geometric levels toward each kink of the averaging kernel
  double ratio = 0.25;
};

/// tau_x chi_{B_r}(y) for the rank-one ball indicator, from the CDF of Phi_k.
double translated_ball_indicator(double kappa, double x, double y, double r);

/// int f(y) tau_x chi_{B_r}(y) |y|^{2k} dy / mu(B_r) (signed).
double ball_average(const Function1D& f, double kappa, double x, double r, const MaximalConfig& cfg = {});
/// Same average as int_0^r [tau_y f(x) + tau_{-y} f(x)] y^{2k} dy / mu(B_r).
double ball_average_translation(const Function1D& f, double kappa, double x, double r, const Translator& tr,
                                int points = 32);

std::vector<double> log_radii(double r_min, double r_max, int count);

struct MaximalResult {
  std::vector<double> x;
  std::vector<double> values;   // nonnegative
  std::vector<double> radii;
  std::vector<double> argmax;   // radius attaining the discrete sup
};

MaximalResult maximal_function(const Function1D& f, double kappa, std::span<const double> xs,
                               std::span<const double> radii, const MaximalConfig& cfg = {});
double maximal_at(const Function1D& f, double kappa, double x, std::span<const double> radii,
                  const MaximalConfig& cfg = {}, double* argmax = nullptr);

/// Default radii for a function: 64 log-spaced values covering its scales.
std::vector<double> default_radii(const Function1D& f, int count = 64);

/// ||M f||_{k,p} for each p, with the |x|^{-(2k+1)} tail of M f continued analytically.
std::vector<double> maximal_lp_norms(const Function1D& f, double kappa, std::span<const double> ps,
                                     std::span<const double> radii, const MaximalConfig& cfg = {}, int points = 8);

/// Parity of a product (and of a convolution) of functions with parities a and b.
Parity product_parity(Parity a, Parity b);

// ---- checks ---------------------------------------------------------------

/// max |(f*g)^ - f^ g^| / ||f^ g^||_inf on the frequency grid.
OperatorReport convolution_theorem_check(const Function1D& f, const Function1D& g, double kappa,
                                         double tolerance = 1e-7);
/// ||f*g||_p / (||g||_1 ||f||_p) <= 1 (+ relative tolerance).
OperatorReport young_check(const Function1D& f, const Function1D& g, double kappa, double p, double tolerance = 1e-6);
/// ||f * phi_eps - f||_p over decreasing eps: monotone and below `final_tolerance` at the end.
OperatorReport approximate_identity_check(const Function1D& f, const Function1D& phi, double kappa,
                                          std::span<const double> epsilons, double p = 2.0,
                                          double final_tolerance = 1e-3);
/// sup_eps |f*phi_eps(x)| / M f(x) over sample points; passes when the ratio stays below `bound`.
OperatorReport domination_check(const Function1D& f, const Function1D& phi, double kappa,
                                std::span<const double> epsilons, double bound = 10.0);

}  // namespace dunkl
