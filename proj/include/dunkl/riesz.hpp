#pragma once

// Rank-one weighted Riesz transform R f(x) = C_R PV int tau_y f(x) sign(y)/|y| dy,
// C_R = Gamma(k+1) / (sqrt(pi) Gamma(k+1/2)), its multiplier route, the odd
// decomposition R f(s) = C_R (R1 f(s) - R2 f(s)) with g = f/x, and the
// classical radial Riesz profile map on R^m.

#include "dunkl/potentials.hpp"
#include "dunkl/report.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"

#include <span>
#include <utility>
#include <vector>

namespace dunkl {

enum class PvPairing { antisymmetrized, ladder_limit };

struct PrincipalValueConfig {
  /// Truncation radii for the ladder mode and diagnostics; strictly decreasing, positive.
  std::vector<double> ladder{0.1, 0.05, 0.025, 0.0125, 0.00625};
  PvPairing pairing = PvPairing::antisymmetrized;
  PotentialConfig quadrature{};

  /// Throws std::invalid_argument unless the ladder is positive and strictly decreasing.
  void validate() const;
};

class RieszTransform {
 public:
  explicit RieszTransform(double kappa, PrincipalValueConfig cfg = {});

  double kappa() const { return kappa_; }
  /// C_R; the multiplier is then exactly -i sign(xi).
  double constant() const { return c_; }

  /// C_R int_0^inf [tau_y f(x) - tau_{-y} f(x)] / y dy (or the ladder extrapolation).
  double operator()(const Function1D& f, double x, TailExponent tail = std::nullopt) const;
  /// C_R int_{|y| >= eps} tau_y f(x) sign(y)/|y| dy.
  double truncated(const Function1D& f, double x, double eps, TailExponent tail = std::nullopt) const;
  /// Truncated values along cfg.ladder.
  std::vector<double> ladder_values(const Function1D& f, double x, TailExponent tail = std::nullopt) const;

  SampledFunction on_grid(const Function1D& f, GridPtr grid, TailExponent tail = std::nullopt) const;
  /// R f tabulated on a profile layout with power tails.
  LineProfile tabulate(const Function1D& f, TailExponent tail = std::nullopt) const;

  /// Decay exponents of R f: the even part from odd f, the odd part from even f with nonzero mass.
  double even_decay() const { return 2.0 * kappa_ + 2.0; }
  double odd_decay() const { return 2.0 * kappa_ + 1.0; }

 private:
  double antisymmetrized(const Function1D& f, double x, double eps, TailExponent tail) const;

  double kappa_, c_;
  PrincipalValueConfig cfg_;
  Translator tr_;
};

Parity flip_parity(Parity p);

/// Riesz transform of grid samples through their interpolant.
SampledFunction riesz_transform_1d(const SampledFunction& f, const PrincipalValueConfig& cfg = {});
/// inverse(-i sign(xi) f^) on the transform's grids.
SampledFunction riesz_multiplier_route(const SampledFunction& f, const DunklTransform1D& transform);

/// f / x as an even function; throws std::invalid_argument when f is not odd.
Function1D divide_by_x(const Function1D& f);
/// (R1 f(s), R2 f(s)) for odd f: s PV int tau_r g(s)/r dr and int tau_r g(s) dr, both even in s.
std::pair<double, double> odd_decomposition(const Function1D& f, double kappa, double s,
                                            const PrincipalValueConfig& cfg = {});
/// Grid version: (R1 f, R2 f) at the nodes.
std::pair<SampledFunction, SampledFunction> odd_decomposition(const SampledFunction& f,
                                                              const PrincipalValueConfig& cfg = {});

/// int_0^inf ds/s int_{-1}^{1} f0(sqrt(rho^2 + s^2 - 2 rho s t)) t (1-t^2)^{(m-3)/2} dt.
double classical_radial_riesz(const Function1D& f0, int m, double rho, const RhoIntegralConfig& cfg = {});
/// int_0^inf dr int_{-1}^{1} g0(sqrt(rho^2 + r^2 - 2 rho r t)) (1-t^2)^{(m-3)/2} dt, the profile of F * |y|^{1-m}
/// up to the sphere measure.
double classical_k1_convolution(const Function1D& g0, int m, double rho, const RhoIntegralConfig& cfg = {});

/// Least-squares c with a ~ c b.
double fit_constant(std::span<const double> a, std::span<const double> b);

// ---- checks -------------------------------------------------------------------

/// Explicit PV route against inverse(-i sign f^) at grid nodes with |x| <= 8.
OperatorReport riesz_transform_multiplier_check(const Function1D& f, double kappa, double tolerance = 1e-5);
/// R(R f) = -f at sample points, R f tabulated with its power tail.
OperatorReport riesz_square_check(const Function1D& f, double kappa, double tolerance = 1e-4);
/// max |R f(x) + s R f(-x)| / max |R f| for f of parity s, without parity shortcuts.
OperatorReport riesz_parity_check(const Function1D& f, double kappa, double tolerance = 1e-8);
/// C_R (R1 - R2) against R f for odd f, plus tau_r f(s) = (s - r) tau_r g(s) and evenness of R1, R2.
OperatorReport odd_decomposition_check(const Function1D& f, double kappa, double tolerance = 1e-5);
/// R f = c sign(x) R~ f0(|x|) for even f, m = 2k + 1 integral; c fitted on the first function and
/// frozen for the rest. Skipped when 2k is not an integer.
OperatorReport radial_reduction_check(std::span<const Function1D> fs, double kappa, double tolerance = 1e-4);
/// R2 f = c K1-profile(g) for odd f = x g, m = 2k + 1; c fitted on the first function and frozen.
OperatorReport k1_identification_check(std::span<const Function1D> odd_fs, double kappa, double tolerance = 1e-5);
/// Singular integral with kernel P_n(y)|y|^{-2k-1-n} against d_{n,k} P_n(xi)/|xi|^n; n = 0 is reported
/// out of range.
OperatorReport general_multiplier_check(int n, const Function1D& f, double kappa, double tolerance = 1e-5);
/// Truncations along the ladder: successive differences decrease and the extrapolated limit matches the
/// antisymmetrized value.
OperatorReport ladder_check(const Function1D& f, double kappa, double x, const PrincipalValueConfig& cfg = {},
                            double tolerance = 1e-6);
/// max ||R f||_p / ||f||_p over the family against a bound, one report per p.
std::vector<OperatorReport> riesz_lp_ratio_check(std::span<const Function1D> fs, double kappa, std::span<const double> ps,
                                                 double bound = 10.0);

}  // namespace dunkl
