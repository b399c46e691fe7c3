#include "dunkl/functions.hpp"
#include "dunkl/profile.hpp"

#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

using namespace dunkl;

TEST_CASE("function families: values, parts and parity") {
  const auto g = families::gaussian(1.5);
  CHECK(g(0.4) == doctest::Approx(std::exp(-2.25 * 0.16)).epsilon(1e-15));
  CHECK(g.parity() == Parity::even);

  const auto h = families::hermite_gaussian(3, 1.0);
  const double x = 0.7;
  CHECK(h(x) == doctest::Approx((8 * x * x * x - 12 * x) * std::exp(-x * x / 2)).epsilon(1e-14));
  CHECK(h.parity() == Parity::odd);

  const auto s = families::shifted_gaussian(0.5, 1.2);
  for (double r : {0.0, 1e-9, 0.3, 2.0, 7.5}) {
    const auto p = s.parts(r);
    CHECK(p.even + r * p.odd_over_r == doctest::Approx(s(r)).epsilon(1e-13));
    CHECK(p.even - r * p.odd_over_r == doctest::Approx(s(-r)).epsilon(1e-13));
  }

  const auto b = families::bump(1.0);
  CHECK(b(1.0) == 0.0);
  CHECK(b(0.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(b.reach() == 1.0);
}

TEST_CASE("parse named families") {
  CHECK(families::parse("gaussian(2)")(0.5) == doctest::Approx(std::exp(-1.0)));
  CHECK(families::parse("odd-gaussian(1)")(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(families::parse("hermite-gaussian(1,1)")(1.0) == doctest::Approx(2 * std::exp(-0.5)));
  CHECK(families::parse("indicator(1)")(0.99) == 1.0);
  CHECK_THROWS_AS(families::parse("nonsense(1)"), std::invalid_argument);
  CHECK_THROWS_AS(families::parse("gaussian(x)"), std::invalid_argument);
}

TEST_CASE("Chebyshev table reproduces smooth functions and derivatives") {
  ProfileLayout layout;
  layout.scale = 0.5;
  auto f = [](double r) { return std::exp(-r * r) * std::cos(3 * r); };
  const auto p = RadialProfile::tabulate(f, layout);
  double err = 0, derr = 0, d2err = 0;
  for (double r = 0.0; r < 6.0; r += 0.0137) {
    err = std::max(err, std::abs(p(r) - f(r)));
    const double df = std::exp(-r * r) * (-2 * r * std::cos(3 * r) - 3 * std::sin(3 * r));
    derr = std::max(derr, std::abs(p.eval(r, 1) - df));
    const double d2f = std::exp(-r * r) * ((4 * r * r - 2 - 9) * std::cos(3 * r) + 12 * r * std::sin(3 * r));
    d2err = std::max(d2err, std::abs(p.eval(r, 2) - d2f));
  }
  CHECK(err < 2e-12);
  CHECK(derr < 1e-9);
  CHECK(d2err < 1e-8);
}

TEST_CASE("power tail continues a rational decay") {
  ProfileLayout layout;
  auto f = [](double r) { return 1.0 / std::pow(1 + r * r, 1.5); };
  const auto p = RadialProfile::tabulate(f, layout, 3.0);
  REQUIRE(p.has_tail());
  for (double r : {130.0, 500.0, 1e4}) CHECK(p(r) == doctest::Approx(f(r)).epsilon(1e-9));
}

TEST_CASE("line profile: parts, norms and Dunkl operators") {
  const double kappa = 0.75;
  ProfileLayout layout;
  layout.scale = 0.5;
  auto F = [](double x) { return std::exp(-(x - 0.3) * (x - 0.3)); };
  const auto lp = LineProfile::tabulate(F, Parity::none, layout);
  for (double x : {-3.0, -0.2, 0.0, 0.1, 2.5}) CHECK(lp(x) == doctest::Approx(F(x)).epsilon(1e-12));

  // weighted L^2 norm against tanh-sinh on each half line
  boost::math::quadrature::tanh_sinh<double> ts;
  auto w2 = [&](double x) { return F(x) * F(x) * std::pow(std::abs(x), 2 * kappa); };
  const double ref = ts.integrate([&](double t) { return w2(t) + w2(-t); }, 0.0, 12.0, 1e-15);
  CHECK(lp.lp_norm(2.0, kappa) == doctest::Approx(std::sqrt(ref)).epsilon(1e-12));

  // D f = f' + kappa (f(x) - f(-x))/x ; D^2 of the Gaussian e^{-x^2} is (4x^2 - 2 - 4 kappa) e^{-x^2}
  auto dF = [](double x) { return -2 * (x - 0.3) * std::exp(-(x - 0.3) * (x - 0.3)); };
  for (double x : {-1.3, 0.4, 2.0}) {
    const double expect = dF(x) + kappa * (F(x) - F(-x)) / x;
    CHECK(lp.dunkl_derivative(x, kappa) == doctest::Approx(expect).epsilon(1e-10));
  }
  const auto g = LineProfile::tabulate([](double x) { return std::exp(-x * x); }, Parity::even, layout);
  for (double x : {0.0, 0.5, -1.7}) {
    CHECK(g.dunkl_laplacian(x, kappa) ==
          doctest::Approx((4 * x * x - 2 - 4 * kappa) * std::exp(-x * x)).epsilon(1e-9));
  }
  // odd: x e^{-x^2}; D^2 from the rank-one formula f'' + 2k f'/x - 2k f/x^2
  const auto o = LineProfile::tabulate([](double x) { return x * std::exp(-x * x); }, Parity::odd, layout);
  for (double x : {0.3, -1.1, 2.2}) {
    const double e = std::exp(-x * x);
    const double f = x * e, f1 = (1 - 2 * x * x) * e, f2 = (4 * x * x * x - 6 * x) * e;
    const double expect = f2 + 2 * kappa * f1 / x - 2 * kappa * f / (x * x);
    CHECK(o.dunkl_laplacian(x, kappa) == doctest::Approx(expect).epsilon(1e-9));
  }
}
