#include "dunkl/norms.hpp"
#include "dunkl/translation.hpp"

#include <doctest.h>

#include <cmath>

using namespace dunkl;

namespace {

// Literal rank-one formula with a single high-order Gauss-Jacobi rule in t.
double translate_oracle(const std::function<double(double)>& f, double k, double x, double y, int n = 400) {
  if (k == 0.0) return f(x - y);
  const QuadratureRule& r = cached_gauss_jacobi(n, k - 1.0, k);
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double rho = std::sqrt(std::max(0.0, x * x + y * y - 2 * x * y * r.nodes[i]));
    const double q = rho > 0 ? (x - y) / rho : 0.0;
    s += r.weights[i] * 0.5 * (f(rho) * (1 + q) + f(-rho) * (1 - q));
  }
  return b_kappa(k) * s;
}

}  // namespace

TEST_CASE("Gaussian translate closed form") {
  for (double k : {0.0, 0.5, 1.0, 2.5}) {
    const Translator tr(k);
    for (double s : {1.0, 2.0}) {
      const auto g = families::gaussian(s);
      double err = 0.0;
      for (double x : {-5.0, -2.0, -0.3, 0.0, 0.4, 1.0, 3.0, 6.0}) {
        for (double y : {-4.0, -0.7, 0.0, 0.2, 1.5, 5.0}) {
          err = std::max(err, std::abs(tr(g, x, y) - gaussian_translate_closed_form(k, s, x, y)));
        }
      }
      CAPTURE(k);
      CAPTURE(s);
      CHECK(err < 1e-12);
    }
  }
  // the closed form itself reduces to the shift at kappa = 0
  CHECK(gaussian_translate_closed_form(0.0, 1.3, 0.4, -1.1) == doctest::Approx(std::exp(-1.69 * 1.5 * 1.5)).epsilon(1e-13));
}

TEST_CASE("explicit formula against a literal high-order rule") {
  const auto f = families::shifted_gaussian(0.5, 1.0);
  const auto o = families::hermite_gaussian(3, 1.0);
  for (double k : {0.25, 1.0, 2.5}) {
    const Translator tr(k);
    for (double x : {-1.5, 0.3, 1.2}) {
      for (double y : {-0.8, 0.5, 1.1}) {
        CHECK(tr(f, x, y) == doctest::Approx(translate_oracle(f, k, x, y)).epsilon(1e-10));
        CHECK(std::abs(tr(o, x, y) - translate_oracle(o, k, x, y)) < 1e-10);
      }
    }
  }
}

TEST_CASE("trivial translations") {
  const auto f = families::shifted_gaussian(0.3, 1.2);
  const Translator tr(0.75);
  for (double x : {-2.0, 0.1, 1.7}) CHECK(tr(f, x, 0.0) == doctest::Approx(f(x)).epsilon(1e-14));
  const Translator tr0(0.0);
  for (double x : {-2.0, 0.1, 1.7}) CHECK(tr0(f, x, 0.6) == f(x - 0.6));
}

TEST_CASE("explicit, radial and spectral routes agree") {
  for (double k : {0.5, 1.0, 2.5}) {
    CAPTURE(k);
    const Translator tr(k);
    const auto g = families::gaussian(1.0);
    const auto m = families::modulated_gaussian(1.5, 1.0);
    for (double x : {-2.5, -0.4, 0.9, 3.0}) {
      for (double y : {-1.2, 0.7, 2.0}) {
        CHECK(std::abs(tr(g, x, y) - translate_radial_1d(g, k, x, y)) < 1e-10);
        CHECK(std::abs(tr(m, x, y) - translate_radial_1d(m, k, x, y, 96)) < 1e-8);
      }
    }
    auto grid = make_grid(k);
    DunklTransform1D T(grid);
    for (const auto& f : {families::gaussian(1.0), families::shifted_gaussian(0.5, 1.0), families::odd_gaussian(1.0)}) {
      const auto sampled = SampledFunction::sample(f, grid);
      const auto spec = translate_spectral(sampled, T, 0.7);
      const auto expl = translate_1d(f, grid, 0.7, tr);
      double err = 0.0;
      for (std::size_t i = 0; i < grid->size(); ++i) err = std::max(err, std::abs(spec.values[i] - expl.values[i]));
      CHECK(err < 1e-7);
    }
  }
}

TEST_CASE("translation properties") {
  const double k = 1.0;
  const Translator tr(k);
  const auto f = families::shifted_gaussian(0.4, 1.0);
  // tau_y f(x) = tau_{-x} f(-y)
  for (double x : {-1.0, 0.5, 2.0}) {
    for (double y : {-0.6, 1.3}) CHECK(tr(f, x, y) == doctest::Approx(tr(f, -y, -x)).epsilon(1e-10));
  }
  // radial nonnegative f: tau_y f >= 0 and mass preserved
  const auto b = families::bump(1.0);
  const LineGrid grid(k, 512, 4.0, 16);
  double mass = 0.0, mass_t = 0.0, minv = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.nodes()[i];
    mass += grid.weights()[i] * b(x);
    const double t = tr(b, x, 1.5);
    minv = std::min(minv, t);
    mass_t += grid.weights()[i] * t;
  }
  CHECK(minv >= -1e-10);
  const auto g = families::gaussian(1.0);
  const LineGrid wide(k, 512, 16.0, 16);
  double gm = 0.0, gm_t = 0.0;
  for (std::size_t i = 0; i < wide.size(); ++i) {
    gm += wide.weights()[i] * g(wide.nodes()[i]);
    gm_t += wide.weights()[i] * tr(g, wide.nodes()[i], 2.0);
  }
  CHECK(gm_t == doctest::Approx(gm).epsilon(1e-7));
  CHECK(mass_t == doctest::Approx(mass).epsilon(1e-4));  // bump translates carry kinks at |x| = |y| +- 1
}

TEST_CASE("translation of radial functions is an L^p contraction") {
  // rank one: for even f the translate is an average of f(rho) against a probability measure,
  // so ||tau_y f||_p <= ||f||_p for every p >= 1, with equality at p = 1 when f >= 0
  for (double k : {0.5, 1.0, 2.5}) {
    const Translator tr(k);
    for (const auto& f : {families::gaussian(1.0), families::gaussian(0.5), families::hermite_gaussian(2, 1.0)}) {
      for (double y : {0.8, 3.0}) {
        NormLayout layout;
        layout.scale = f.length_scale();
        layout.extent = 20.0 * f.length_scale() + y;
        const auto T = [&](double x) { return tr(f, x, y); };
        for (double p : {1.0, 1.5, 2.0, 4.0}) {
          const double nf = line_lp_norm([&](double x) { return f(x); }, k, p, layout, Parity::even);
          const double nt = line_lp_norm(T, k, p, layout);
          CHECK(nt <= nf * (1.0 + 1e-8));
          if (p == 1.0 && f.name().rfind("gaussian", 0) == 0) CHECK(nt == doctest::Approx(nf).epsilon(1e-8));
        }
      }
    }
  }
}

TEST_CASE("duality and support reports") {
  const auto f = families::gaussian(1.0);
  const auto g = families::monomial_gaussian(2, 1.0);
  auto r = translation_duality_check(f, families::gaussian(0.8), 0.5, 1.0);
  CHECK(r.pass);
  r = translation_duality_check(f, g, 0.5, 1.0);
  CHECK(r.pass);
  r = translation_duality_check(families::shifted_gaussian(0.3, 1.0), g, 1.5, -0.7);
  CHECK(r.pass);
  CHECK(r.rel_error < 1e-7);
  r = translation_duality_check(f, g, 0.5, 0.0);
  CHECK(r.abs_error < 1e-14);
  auto s = support_check(families::bump(1.0), 1.0, 0.5, 0.5);
  CHECK(s.pass);
  s = support_check(families::bump(1.0), 1.0, 2.0, 2.0);
  CHECK(s.pass);
  s = support_check(families::bump(1.0), 1.0, 2.0, 0.0);
  CHECK(s.pass);
}

TEST_CASE("sampled input goes through interpolation") {
  const double k = 0.5;
  auto grid = make_grid(k);
  const Translator tr(k);
  const auto f = families::gaussian(1.0);
  const auto sampled = SampledFunction::sample(f, grid);
  const auto a = translate_1d(sampled, 0.9, tr);
  const auto b = translate_1d(f, grid, 0.9, tr);
  double err = 0.0;
  for (std::size_t i = 0; i < grid->size(); ++i) err = std::max(err, std::abs(a.values[i] - b.values[i]));
  CHECK(err < 1e-8);
}
