#include "doctest.h"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

#include <cmath>
#include <numbers>

using namespace dunkl;

namespace {
double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }
}  // namespace

TEST_CASE("Gauss-Legendre small rules and exactness") {
  auto r1 = gauss_legendre(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(2.0));
  auto r2 = gauss_legendre(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  auto r16 = gauss_legendre(16);
  CHECK(integrate(r16, [](double t) { return std::pow(t, 30); }) == doctest::Approx(2.0 / 31.0).epsilon(1e-13));
  CHECK(integrate(r16, [](double t) { return std::pow(t, 31); }) == doctest::Approx(0.0));
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  for (int n : {3, 7, 20, 64}) {
    auto r = gauss_legendre(n);
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    for (double w : r.weights) CHECK(w > 0.0);
  }
}

TEST_CASE("Gauss-Jacobi rules") {
  auto gj = gauss_jacobi(12, 0.0, 0.0);
  auto gl = gauss_legendre(12);
  for (int i = 0; i < 12; ++i) {
    CHECK(gj.nodes[i] == doctest::Approx(gl.nodes[i]).epsilon(1e-14));
    CHECK(gj.weights[i] == doctest::Approx(gl.weights[i]).epsilon(1e-13));
  }
  for (double a : {-0.75, -0.5, 0.0, 0.3, 1.5, 4.0}) {
    for (double b : {-0.9, -0.25, 0.5, 2.5}) {
      for (int n : {1, 2, 5, 16, 40}) {
        auto r = gauss_jacobi(n, a, b);
        double total = 0.0;
        for (double w : r.weights) {
          CHECK(w > 0.0);
          total += w;
        }
        CHECK(total == doctest::Approx(std::pow(2.0, a + b + 1) * beta_fn(a + 1, b + 1)).epsilon(1e-12));
        for (std::size_t i = 1; i < r.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
        // Exactness on the basis (1+t)^j, j <= 2n-1.
        for (int j = 0; j <= 2 * n - 1; j += std::max(1, (2 * n - 1) / 5)) {
          double s = 0.0;
          for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(1.0 + r.nodes[i], j);
          const double ref = std::pow(2.0, a + b + j + 1) * beta_fn(a + 1, b + j + 1);
          CHECK(s == doctest::Approx(ref).epsilon(1e-12));
        }
      }
    }
  }
  for (double k : {0.25, 1.0, 2.5}) {
    auto r = gauss_jacobi(8, k - 1.0, k);
    double total = 0.0;
    for (double w : r.weights) total += w;
    CHECK(total == doctest::Approx(1.0 / b_kappa(k)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(gauss_jacobi(4, 0.0, -1.2), std::domain_error);
}

TEST_CASE("radial rules resolve endpoint powers") {
  RadialGrid g;
  g.cutoff = 1.0;
  auto r = radial_rule(g, -0.5);
  CHECK(integrate(r, [](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-12));
  auto r9 = radial_rule(g, -0.9);
  CHECK(integrate(r9, [](double) { return 1.0; }) == doctest::Approx(10.0).epsilon(1e-12));
  const double ref = std::sqrt(std::numbers::pi) * std::erf(1.0);
  CHECK(integrate(r, [](double x) { return std::exp(-x); }) == doctest::Approx(ref).epsilon(1e-12));
  // r^beta times a function with a second power r^{0.3} near 0.
  auto r2 = radial_rule(g, 0.2);
  const double mixed = integrate(r2, [](double x) { return 1.0 + std::pow(x, 0.3); });
  CHECK(mixed == doctest::Approx(1.0 / 1.2 + 1.0 / 1.5).epsilon(1e-9));
  CHECK_THROWS_AS(radial_rule(g, -1.0), std::domain_error);
  for (double w : r.weights) CHECK(w > 0.0);
}

TEST_CASE("integrate dot product") {
  auto r = gauss_legendre(9);
  std::vector<std::complex<double>> ones(9, {1.0, 0.0}), zeros(9);
  CHECK(std::abs(integrate(r, std::span<const std::complex<double>>(ones)) - 2.0) < 1e-14);
  CHECK(std::abs(integrate(r, std::span<const std::complex<double>>(zeros))) == 0.0);
  std::vector<double> short_v(3, 1.0);
  CHECK_THROWS_AS(integrate(r, std::span<const double>(short_v)), std::invalid_argument);
}

TEST_CASE("refinement convergence of Gauss-Legendre") {
  auto f = [](double t) { return 1.0 / (1.0 + 4.0 * t * t); };
  const double exact = std::atan(2.0);
  double prev = 1.0;
  for (int n = 4; n <= 64; n *= 2) {
    const double err = std::abs(integrate(gauss_legendre(n), f) - exact);
    if (prev > 1e-12) CHECK((err <= prev / 10.0 || err < 1e-12));
    prev = err;
  }
  CHECK(prev < 1e-12);
}

TEST_CASE("line grid: symmetry, c_h, interpolation, differentiation") {
  for (double k : {0.0, 0.25, 0.5, 1.0, 2.5}) {
    LineGrid g(k);
    CHECK(g.size() == 256);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g.nodes()[i] == -g.nodes()[g.mirror(i)]);
      CHECK(g.weights()[i] == g.weights()[g.mirror(i)]);
      CHECK(g.nodes()[i] != 0.0);
    }
    std::vector<double> odd(g.size()), gauss(g.size()), odd_abs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double x = g.nodes()[i];
      odd[i] = x * x * x * std::exp(-x * x / 3.0);
      gauss[i] = std::exp(-x * x / 2.0);
      odd_abs[i] = std::abs(odd[i]);
    }
    const double scale = integrate(g.rule(), std::span<const double>(odd_abs));
    CHECK(std::abs(integrate(g.rule(), std::span<const double>(odd))) < 1e-14 * scale);
    Constants c(MultiplicityParams::line(k));
    CHECK(integrate(g.rule(), std::span<const double>(gauss)) == doctest::Approx(1.0 / c.c_h()).epsilon(1e-8));

    for (double x : {-11.3, -3.0, -0.01, 0.0, 0.4, 1.5, 7.77}) {
      CHECK(std::abs(g.interpolate(gauss, x) - std::exp(-x * x / 2.0)) < 1e-10);
    }
    auto d = g.differentiate(gauss);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double x = g.nodes()[i];
      worst = std::max(worst, std::abs(d[i] + x * std::exp(-x * x / 2.0)));
    }
    CHECK(worst < 1e-8);
  }
  CHECK_THROWS_AS(LineGrid(0.5, 100), std::invalid_argument);
}
