#include "dunkl/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dunkl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

// Below this |z| the power series of j_a is summed directly; the largest term is
// then at most e^{|z|/2}-ish and cancellation costs < 2 digits.
constexpr double kBesselSeriesLimit = 4.0;
// Above this |z| the asymptotic expansion of e^{-z} I_a(z) is used.
constexpr double kBesselIAsymptotic = 40.0;

double j_series(double a, double z) {
  const double q = -0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * (a + static_cast<double>(k)));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double log_gamma(double x) { return std::lgamma(x); }

}  // namespace

MultiplicityParams::MultiplicityParams(std::vector<double> kappa) : kappa_(std::move(kappa)), gamma_(0.0) {
  if (kappa_.empty()) throw std::invalid_argument("multiplicity vector must be non-empty");
  for (double k : kappa_) {
    if (!std::isfinite(k) || k < 0.0) {
      throw std::domain_error("multiplicity values must be finite and nonnegative");
    }
    gamma_ += k;
  }
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("gamma_fn: argument must be positive, got " + std::to_string(x));
  }
  return std::tgamma(x);
}

double normalized_bessel_j(double order, double z) {
  if (!(order >= -0.5)) throw std::domain_error("normalized_bessel_j: order must be >= -1/2");
  const double az = std::abs(z);
  if (az == 0.0) return 1.0;
  if (az <= kBesselSeriesLimit) return j_series(order, az);
  if (order == -0.5) return std::cos(az);
  if (order == 0.5) return std::sin(az) / az;
  const double scale = std::exp(log_gamma(order + 1.0) + order * std::log(2.0 / az));
  return scale * boost::math::cyl_bessel_j(order, az);
}

double normalized_bessel_i_scaled(double order, double z) {
  if (!(order >= -0.5)) throw std::domain_error("normalized_bessel_i_scaled: order must be >= -1/2");
  const double az = std::abs(z);
  if (az == 0.0) return 1.0;
  if (az <= kBesselIAsymptotic) {
    const double q = 0.25 * az * az;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 400; ++k) {
      term *= q / (static_cast<double>(k) * (order + static_cast<double>(k)));
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return sum * std::exp(-az);
  }
  // e^{-z} I_a(z) ~ (2 pi z)^{-1/2} sum_k (-1)^k a_k(a) / z^k
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * az);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  const double log_pref = log_gamma(order + 1.0) + order * std::log(2.0 / az) - 0.5 * std::log(2.0 * kPi * az);
  return std::exp(log_pref) * sum;
}

cplx dunkl_kernel_1d(double kappa, double x, double y) {
  if (!(kappa >= 0.0)) throw std::domain_error("dunkl_kernel_1d: kappa must be nonnegative");
  const double z = x * y;
  if (kappa == 0.0) return {std::cos(z), std::sin(z)};
  const double even = normalized_bessel_j(kappa - 0.5, z);
  const double odd = z / (2.0 * kappa + 1.0) * normalized_bessel_j(kappa + 0.5, z);
  return {even, odd};
}

double ScaledReal::value() const { return mantissa * std::exp(log_scale); }

ScaledReal dunkl_kernel_real_1d(double kappa, double x, double y) {
  if (!(kappa >= 0.0)) throw std::domain_error("dunkl_kernel_real_1d: kappa must be nonnegative");
  const double z = x * y;
  const double az = std::abs(z);
  if (kappa == 0.0) return {z >= 0.0 ? 1.0 : std::exp(-2.0 * az), az};
  const double even = normalized_bessel_i_scaled(kappa - 0.5, z);
  const double odd = z / (2.0 * kappa + 1.0) * normalized_bessel_i_scaled(kappa + 0.5, z);
  return {even + odd, az};
}

cplx dunkl_kernel_nd(const MultiplicityParams& params, std::span<const double> x, std::span<const double> y) {
  if (x.size() != params.dim() || y.size() != params.dim()) {
    throw std::invalid_argument("dunkl_kernel_nd: dimension mismatch");
  }
  cplx out{1.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) out *= dunkl_kernel_1d(params.kappa(i), x[i], y[i]);
  return out;
}

double weight_h2(double kappa, double x) {
  if (kappa == 0.0) return 1.0;
  return std::pow(std::abs(x), 2.0 * kappa);
}

double weight_h2(const MultiplicityParams& params, std::span<const double> x) {
  if (x.size() != params.dim()) throw std::invalid_argument("weight_h2: dimension mismatch");
  double w = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) w *= weight_h2(params.kappa(i), x[i]);
  return w;
}

double b_kappa(double kappa) {
  if (!(kappa > 0.0)) {
    throw std::domain_error("b_kappa: kappa must be positive (kappa = 0 is the Dirac limit at t = 1)");
  }
  return std::exp(log_gamma(kappa + 0.5) - log_gamma(kappa)) / kSqrtPi;
}

double phi_kappa_weight(double kappa, double t) {
  if (!(kappa > 0.0)) {
    throw std::domain_error("phi_kappa_weight: kappa = 0 degenerates to a point mass at t = 1");
  }
  if (!(t > -1.0 && t < 1.0)) throw std::domain_error("phi_kappa_weight: t must lie in (-1, 1)");
  return b_kappa(kappa) * std::pow(1.0 + t, kappa) * std::pow(1.0 - t, kappa - 1.0);
}

Constants::Constants(const MultiplicityParams& params) : params_(params) {
  double log_ch_inv = 0.0;
  double log_prod_gamma = 0.0;
  double b = 1.0;
  for (double k : params.kappa()) {
    log_ch_inv += (k + 0.5) * std::log(2.0) + log_gamma(k + 0.5);
    log_prod_gamma += log_gamma(k + 0.5);
    if (k > 0.0) b *= dunkl::b_kappa(k);
  }
  c_h_ = std::exp(-log_ch_inv);
  const double d = static_cast<double>(params.dim());
  const double g = params.gamma_kappa();
  d_kappa_ = std::exp(log_gamma(g + 0.5 * d + 1.0) - log_prod_gamma);
  b_kappa_ = b;
}

double Constants::d_kappa_alpha(double alpha) const {
  const double hd = params_.homogeneous_dim();
  if (!(alpha > 0.0 && alpha < hd)) {
    throw std::domain_error("alpha must lie in (0, 2*gamma_kappa + d) = (0, " + std::to_string(hd) + ")");
  }
  const double g = params_.gamma_kappa();
  const double d = static_cast<double>(params_.dim());
  return std::exp((-g - 0.5 * d + alpha) * std::log(2.0) + log_gamma(0.5 * alpha) - log_gamma(g + 0.5 * (d - alpha)));
}

namespace {
cplx i_pow_minus(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}
}  // namespace

cplx Constants::d_n_kappa_alpha(int n, double alpha) const {
  if (n < 0) throw std::domain_error("d_n_kappa_alpha: n must be nonnegative");
  const double hd = params_.homogeneous_dim();
  if (!(alpha > 0.0 && alpha < hd + n)) throw std::domain_error("d_n_kappa_alpha: alpha out of range");
  const double g = params_.gamma_kappa();
  const double d = static_cast<double>(params_.dim());
  const double mag = std::exp((-g - 0.5 * d + alpha) * std::log(2.0) + log_gamma(0.5 * (n + alpha)) -
                              log_gamma(g + 0.5 * (n + d - alpha)));
  return i_pow_minus(n) * mag;
}

cplx Constants::d_n_kappa(int n) const {
  if (n < 1) throw std::domain_error("d_n_kappa: the singular-integral constant needs n >= 1 (Gamma(0) diverges)");
  const double g = params_.gamma_kappa();
  const double d = static_cast<double>(params_.dim());
  const double mag =
      std::exp((-g - 0.5 * d) * std::log(2.0) + log_gamma(0.5 * n) - log_gamma(g + 0.5 * (n + d)));
  return i_pow_minus(n) * mag;
}

double Constants::ball_measure(double r) const {
  if (!(r >= 0.0)) throw std::domain_error("ball_measure: radius must be nonnegative");
  return std::pow(r, params_.homogeneous_dim()) / d_kappa_;
}

double Constants::riesz_c_j_displayed() const {
  const double g = params_.gamma_kappa();
  const double d = static_cast<double>(params_.dim());
  return std::exp((g + 0.5 * d) * std::log(2.0) + log_gamma(g + 0.5 * (d + 1.0))) / kSqrtPi;
}

double Constants::riesz_c_line_displayed() const {
  return std::exp(log_gamma(params_.gamma_kappa() + 1.0)) / kSqrtPi;
}

double Constants::riesz_constant() const {
  double log_prod_gamma = 0.0;
  for (double k : params_.kappa()) log_prod_gamma += log_gamma(k + 0.5);
  const double g = params_.gamma_kappa();
  const double d = static_cast<double>(params_.dim());
  return std::exp(log_gamma(g + 0.5 * (d + 1.0)) - log_prod_gamma) / kSqrtPi;
}

double Constants::riesz_potential_normalizer(double alpha) const { return d_kappa_alpha(alpha) / c_h_; }

}  // namespace dunkl
