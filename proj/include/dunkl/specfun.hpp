#pragma once

// Special functions, the Dunkl kernel for Z_2 and Z_2^d, the weight h_k^2 and
// the normalization constants shared by every operator in the library.

#include <complex>
#include <span>
#include <vector>

namespace dunkl {

using cplx = std::complex<double>;

/// Multiplicity function of the group Z_2^d: one nonnegative kappa per axis.
/// d == 1 is the reflection group Z_2 acting on the line.
class MultiplicityParams {
 public:
  explicit MultiplicityParams(std::vector<double> kappa);
  static MultiplicityParams line(double kappa) { return MultiplicityParams({kappa}); }

  const std::vector<double>& kappa() const { return kappa_; }
  double kappa(std::size_t axis) const { return kappa_.at(axis); }
  double gamma_kappa() const { return gamma_; }
  std::size_t dim() const { return kappa_.size(); }
  /// Homogeneous dimension 2*gamma_kappa + d.
  double homogeneous_dim() const { return 2.0 * gamma_ + static_cast<double>(dim()); }

 private:
  std::vector<double> kappa_;
  double gamma_;
};

/// Gamma function for positive arguments.
double gamma_fn(double x);

/// Normalized Bessel function j_a(z) = 2^a Gamma(a+1) J_a(z) / z^a, a >= -1/2.
double normalized_bessel_j(double order, double z);

/// e^{-|z|} i_a(z) where i_a(z) = 2^a Gamma(a+1) I_a(z) / z^a (real argument).
double normalized_bessel_i_scaled(double order, double z);

/// Rank-one kernel E(x, iy) = j_{k-1/2}(xy) + i xy/(2k+1) j_{k+1/2}(xy).
cplx dunkl_kernel_1d(double kappa, double x, double y);

/// Rank-one kernel with real arguments E(x, y) = V_k[e^{x y t}], returned as
/// log-scaled pair: E(x,y) = exp(log_scale) * mantissa.
struct ScaledReal {
  double mantissa;
  double log_scale;
  double value() const;
};
ScaledReal dunkl_kernel_real_1d(double kappa, double x, double y);

/// Product kernel E(x, iy) for Z_2^d.
cplx dunkl_kernel_nd(const MultiplicityParams& params, std::span<const double> x,
                     std::span<const double> y);

/// h_k^2(x) = prod |x_i|^{2 k_i}.
double weight_h2(const MultiplicityParams& params, std::span<const double> x);
double weight_h2(double kappa, double x);

/// b_k = Gamma(k+1/2) / (sqrt(pi) Gamma(k)), the mass normalizer of Phi_k.
double b_kappa(double kappa);

/// Phi_k(t) = b_k (1+t)(1-t^2)^{k-1} on (-1, 1); k == 0 throws (Dirac limit).
double phi_kappa_weight(double kappa, double t);

/// Closed-form normalization constants for a multiplicity function.
class Constants {
 public:
  explicit Constants(const MultiplicityParams& params);

  /// c_h with c_h^{-1} = int h_k^2(x) e^{-|x|^2/2} dx.
  double c_h() const { return c_h_; }
  /// d_k with d_k^{-1} = int_{B_1} h_k^2.
  double d_kappa() const { return d_kappa_; }
  /// Product of per-axis b_k (axes with k == 0 contribute 1).
  double b_kappa() const { return b_kappa_; }
  /// d_k^alpha = 2^{-g-d/2+alpha} Gamma(alpha/2) / Gamma(g + (d-alpha)/2).
  double d_kappa_alpha(double alpha) const;
  /// d_{n,k}^alpha = i^{-n} 2^{-g-d/2+alpha} Gamma((n+alpha)/2) / Gamma(g + (n+d-alpha)/2).
  cplx d_n_kappa_alpha(int n, double alpha) const;
  /// alpha -> 0 limit d_{n,k} used by the singular-integral multiplier theorem (n >= 1).
  cplx d_n_kappa(int n) const;
  /// int_{B_r} h_k^2 = r^{2g+d} / d_k.
  double ball_measure(double r) const;

  /// Constant of the Riesz transform as displayed for general d:
  /// 2^{g+d/2} Gamma(g+(d+1)/2) / sqrt(pi).
  double riesz_c_j_displayed() const;
  /// Rank-one constant as displayed for the line: Gamma(k+1)/sqrt(pi).
  double riesz_c_line_displayed() const;
  /// Constant C such that C * PV int tau_y f(x) y_j/|y|^{2g+d+1} h_k^2(y) dy has
  /// multiplier -i x_j/|x| under the unitary transform used here.
  double riesz_constant() const;
  /// Normalizer N_alpha with I_alpha f = N_alpha^{-1} int tau_y f |y|^{alpha-2g-d} h_k^2,
  /// chosen so that the multiplier is exactly |x|^{-alpha}.
  double riesz_potential_normalizer(double alpha) const;

 private:
  MultiplicityParams params_;
  double c_h_;
  double d_kappa_;
  double b_kappa_;
};

}  // namespace dunkl
