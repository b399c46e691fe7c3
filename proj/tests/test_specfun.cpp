#include "doctest.h"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace dunkl;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

// Power series of j_a at 50 digits.
double series_j_oracle(double a, double z) {
  mp q = -mp(z) * mp(z) / 4;
  mp term = 1, sum = 1;
  for (int k = 1; k < 200; ++k) {
    term *= q / (mp(k) * (mp(a) + k));
    sum += term;
  }
  return static_cast<double>(sum);
}

double mp_normalized_j(double a, double z) {
  mp J = boost::math::cyl_bessel_j(mp(a), mp(z));
  mp scale = boost::math::tgamma(mp(a) + 1) * boost::multiprecision::pow(mp(2) / mp(z), mp(a));
  return static_cast<double>(J * scale);
}

double mp_scaled_i(double a, double z) {
  mp I = boost::math::cyl_bessel_i(mp(a), mp(z));
  mp scale = boost::math::tgamma(mp(a) + 1) * boost::multiprecision::pow(mp(2) / mp(z), mp(a)) * exp(-mp(z));
  return static_cast<double>(I * scale);
}

// E(x, iy) from the integral over t against Phi_kappa, by Gauss-Jacobi.
std::complex<double> kernel_by_quadrature(double kappa, double x, double y) {
  if (kappa == 0.0) return std::exp(std::complex<double>(0.0, x * y));
  const QuadratureRule r = gauss_jacobi(120, kappa - 1.0, kappa);
  std::complex<double> s{0.0, 0.0};
  for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::exp(std::complex<double>(0.0, x * y * r.nodes[i]));
  return b_kappa(kappa) * s;
}

double tanh_sinh_half_line(const std::function<double(double)>& f) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([&f](double x) { return x > 60.0 ? 0.0 : f(x); }, 0.0, std::numeric_limits<double>::infinity(), 1e-14);
}

}  // namespace

TEST_CASE("gamma_fn reference values and domain") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("normalized_bessel_j closed forms and oracles") {
  CHECK(std::abs(normalized_bessel_j(0.5, std::numbers::pi)) < 1e-15);
  for (double a : {-0.5, 0.0, 0.75, 3.0}) CHECK(normalized_bessel_j(a, 0.0) == 1.0);
  CHECK(normalized_bessel_j(1.0, 2.5) == doctest::Approx(series_j_oracle(1.0, 2.5)).epsilon(1e-14));
  CHECK_THROWS_AS(normalized_bessel_j(-0.6, 1.0), std::domain_error);

  // Relative to the envelope Gamma(a+1)(2/z)^a sqrt(2/(pi z)) for large z.
  for (double a : {-0.25, 0.25, 1.0, 1.75, 3.0}) {
    for (double z : {0.3, 2.0, 3.99, 4.01, 7.5, 12.0, 29.9, 30.1, 55.0, 140.0, 600.0, 1000.0}) {
      const double ref = mp_normalized_j(a, z);
      const double env = std::max(1e-300, std::min(1.0, std::tgamma(a + 1.0) * std::pow(2.0 / z, a) *
                                                            std::sqrt(2.0 / (std::numbers::pi * z))));
      CHECK(std::abs(normalized_bessel_j(a, z) - ref) <= 1e-12 * env);
      CHECK(normalized_bessel_j(a, -z) == normalized_bessel_j(a, z));
    }
  }
}

TEST_CASE("scaled modified Bessel function against multiprecision") {
  for (double a : {-0.5, 0.0, 0.5, 1.25, 3.0}) {
    for (double z : {0.1, 1.0, 5.0, 25.0, 39.5, 40.5, 80.0, 400.0}) {
      CHECK(normalized_bessel_i_scaled(a, z) == doctest::Approx(mp_scaled_i(a, z)).epsilon(1e-13));
    }
  }
}

TEST_CASE("rank-one kernel: trivial cases, symmetry, conjugation") {
  for (double x : {-2.0, 0.3, 4.0}) {
    for (double y : {-1.5, 0.0, 2.2}) {
      const auto e0 = dunkl_kernel_1d(0.0, x, y);
      CHECK(std::abs(e0 - std::exp(std::complex<double>(0.0, x * y))) < 1e-15);
      for (double k : {0.25, 1.0, 2.5}) {
        CHECK(std::abs(dunkl_kernel_1d(k, x, 0.0) - 1.0) < 1e-15);
        CHECK(std::abs(dunkl_kernel_1d(k, x, y) - dunkl_kernel_1d(k, y, x)) < 1e-12);
        CHECK(std::abs(dunkl_kernel_1d(k, x, -y) - std::conj(dunkl_kernel_1d(k, x, y))) < 1e-15);
      }
    }
  }
  CHECK_THROWS_AS(dunkl_kernel_1d(-0.1, 1.0, 1.0), std::domain_error);
}

TEST_CASE("rank-one kernel matches quadrature of the intertwining integral") {
  for (double k : {0.25, 0.5, 1.0, 2.5}) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double x = -5.0 + 10.0 * i / 19.0;
        const double y = -4.0 + 8.0 * j / 19.0 + 0.01;
        worst = std::max(worst, std::abs(dunkl_kernel_1d(k, x, y) - kernel_by_quadrature(k, x, y)));
      }
    }
    CHECK(worst <= 1e-10);
  }
  const auto v = dunkl_kernel_1d(1.0, 1.0, 2.0);
  CHECK(std::abs(v - kernel_by_quadrature(1.0, 1.0, 2.0)) <= 1e-12);
}

TEST_CASE("real-argument kernel equals the t-integral of e^{xyt}") {
  for (double k : {0.0, 0.5, 1.5}) {
    for (double x : {-3.0, 0.7, 6.0}) {
      for (double y : {-2.0, 1.1, 9.0}) {
        double ref;
        if (k == 0.0) {
          ref = std::exp(x * y);
        } else {
          const QuadratureRule r = gauss_jacobi(120, k - 1.0, k);
          double s = 0.0;
          for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::exp(x * y * r.nodes[i]);
          ref = b_kappa(k) * s;
        }
        CHECK(dunkl_kernel_real_1d(k, x, y).value() == doctest::Approx(ref).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("product kernel and weights") {
  MultiplicityParams zero({0.0, 0.0});
  std::vector<double> x{1.3, -0.4}, y{0.5, 2.0}, o{0.0, 0.0};
  CHECK(std::abs(dunkl_kernel_nd(zero, x, y) - std::exp(std::complex<double>(0.0, 1.3 * 0.5 - 0.8))) < 1e-15);
  MultiplicityParams p({1.0, 0.5});
  CHECK(std::abs(dunkl_kernel_nd(p, x, o) - 1.0) < 1e-15);
  std::vector<double> x2{1.0, 1.0}, y2{2.0, -1.0};
  const auto ref = kernel_by_quadrature(1.0, 1.0, 2.0) * kernel_by_quadrature(0.5, 1.0, -1.0);
  CHECK(std::abs(dunkl_kernel_nd(p, x2, y2) - ref) < 1e-12);
  std::vector<double> bad{1.0};
  CHECK_THROWS_AS(dunkl_kernel_nd(p, bad, y2), std::invalid_argument);

  CHECK(weight_h2(MultiplicityParams::line(0.0), std::vector<double>{3.0}) == 1.0);
  CHECK(weight_h2(MultiplicityParams::line(1.0), std::vector<double>{2.0}) == doctest::Approx(4.0));
  CHECK(weight_h2(MultiplicityParams({0.5, 1.0}), std::vector<double>{2.0, 3.0}) == doctest::Approx(18.0));
}

TEST_CASE("multiplicity invariants") {
  MultiplicityParams p({0.25, 1.5, 0.0});
  CHECK(p.gamma_kappa() == 0.25 + 1.5 + 0.0);
  CHECK(p.dim() == 3);
  std::vector<double> x{0.7, -1.2, 2.0}, sx{2.1, -3.6, 6.0};
  CHECK(weight_h2(p, sx) == doctest::Approx(std::pow(3.0, 2.0 * p.gamma_kappa()) * weight_h2(p, x)).epsilon(1e-13));
  CHECK_THROWS_AS(MultiplicityParams({-0.1}), std::domain_error);
  CHECK_THROWS_AS(MultiplicityParams(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("Phi_kappa normalization") {
  CHECK(b_kappa(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi_kappa_weight(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi_kappa_weight(2.0, 0.999999) < 1e-5);
  CHECK(phi_kappa_weight(2.0, -0.999999) < 1e-11);
  CHECK_THROWS_AS(phi_kappa_weight(0.0, 0.2), std::domain_error);
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double k : {0.25, 0.5, 1.0, 2.5, 7.0}) {
    // Substitute s = (1-t)^k to remove the endpoint singularity at t = 1.
    const double mass = b_kappa(k) / k *
                        ts.integrate([k](double u) { return std::pow(std::max(0.0, 2.0 - std::pow(u, 1.0 / k)), k); },
                                     0.0, std::pow(2.0, k), 1e-14);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("normalization constants match direct quadrature") {
  for (double k : {0.0, 0.25, 0.5, 1.0, 2.5}) {
    Constants c(MultiplicityParams::line(k));
    const double ch_inv = 2.0 * tanh_sinh_half_line([k](double x) { return std::pow(x, 2 * k) * std::exp(-x * x / 2); });
    CHECK(1.0 / c.c_h() == doctest::Approx(ch_inv).epsilon(1e-10));
    boost::math::quadrature::tanh_sinh<double> ts;
    const double ball = 2.0 * ts.integrate([k](double x) { return std::pow(x, 2 * k); }, 0.0, 1.0, 1e-14);
    CHECK(1.0 / c.d_kappa() == doctest::Approx(ball).epsilon(1e-10));
    CHECK(c.ball_measure(2.0) == doctest::Approx(ball * std::pow(2.0, 2 * k + 1)).epsilon(1e-12));
    for (double a : {0.3, 0.7}) {
      CHECK(std::abs(c.d_n_kappa_alpha(0, a) - c.d_kappa_alpha(a)) < 1e-15 * c.d_kappa_alpha(a));
    }
    CHECK_THROWS_AS(c.d_kappa_alpha(2 * k + 1.0), std::domain_error);
    CHECK_THROWS_AS(c.d_n_kappa(0), std::domain_error);
  }
  // Two-dimensional product weight: the Gaussian integral factorizes.
  Constants c2(MultiplicityParams({0.5, 1.0}));
  Constants a(MultiplicityParams::line(0.5)), b(MultiplicityParams::line(1.0));
  CHECK(c2.c_h() == doctest::Approx(a.c_h() * b.c_h()).epsilon(1e-14));
  // Ball integral in the plane by polar coordinates: int_0^1 r^{2g+1} dr * int |cos|^{2k1}|sin|^{2k2}.
  boost::math::quadrature::tanh_sinh<double> ts;
  const double ang = 4.0 * ts.integrate([](double th) { return std::pow(std::cos(th), 1.0) * std::pow(std::sin(th), 2.0); },
                                        0.0, std::numbers::pi / 2, 1e-14);
  CHECK(1.0 / c2.d_kappa() == doctest::Approx(ang / (2.0 * 1.5 + 2.0)).epsilon(1e-10));
}

TEST_CASE("Riesz constants are mutually consistent") {
  for (double k : {0.0, 0.5, 1.0, 2.5}) {
    Constants c(MultiplicityParams::line(k));
    CHECK(c.riesz_constant() == doctest::Approx(c.riesz_c_j_displayed() * c.c_h()).epsilon(1e-13));
    CHECK(c.riesz_constant() == doctest::Approx(c.riesz_c_line_displayed() / std::tgamma(k + 0.5)).epsilon(1e-13));
  }
  Constants c0(MultiplicityParams::line(0.0));
  CHECK(c0.riesz_constant() == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
}
