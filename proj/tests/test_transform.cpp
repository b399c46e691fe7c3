#include "dunkl/transform.hpp"

#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>

#include <cmath>

using namespace dunkl;

namespace {

constexpr cplx I{0.0, 1.0};

double max_err(const SampledFunction& f, const std::function<cplx(double)>& ref) {
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f.values[i] - ref(f.grid->nodes()[i])));
  return m;
}

// V_k(x^n) = c_n x^n with c_n from Beta moments of Phi_k.
double intertwine_moment(double k, int n) {
  if (k == 0.0) return 1.0;
  const double m = n % 2 == 0 ? boost::math::beta((n + 1) / 2.0, k) : boost::math::beta((n + 2) / 2.0, k);
  return b_kappa(k) * m;
}

}  // namespace

TEST_CASE("Gaussian and x-Gaussian are eigenfunctions") {
  for (double k : {0.0, 0.25, 0.5, 1.0, 2.5}) {
    CAPTURE(k);
    auto grid = make_grid(k);
    DunklTransform1D T(grid);
    auto g = SampledFunction::sample([](double x) { return cplx(std::exp(-x * x / 2)); }, grid, Parity::even);
    CHECK(max_err(T.forward(g), [](double y) { return cplx(std::exp(-y * y / 2)); }) < 1e-10);
    auto o = SampledFunction::sample([](double x) { return cplx(x * std::exp(-x * x / 2)); }, grid, Parity::odd);
    CHECK(max_err(T.forward(o), [](double y) { return -I * y * std::exp(-y * y / 2); }) < 1e-10);
    // the same without parity hints
    o.parity = Parity::none;
    CHECK(max_err(T.forward(o), [](double y) { return -I * y * std::exp(-y * y / 2); }) < 1e-10);
  }
}

TEST_CASE("kappa = 0 is the unitary Fourier transform") {
  auto grid = make_grid(0.0);
  DunklTransform1D T(grid);
  // f = x^2 e^{-x^2}: (1/sqrt(2 pi)) int f e^{-ixy} dx = (2 - y^2) e^{-y^2/4} / (4 sqrt 2)
  auto f = SampledFunction::sample([](double x) { return cplx(x * x * std::exp(-x * x)); }, grid);
  CHECK(max_err(T.forward(f), [](double y) { return cplx((2 - y * y) * std::exp(-y * y / 4) / (4 * std::sqrt(2.0))); }) <
        1e-11);
  // shifted Gaussian picks up the phase e^{-icy}
  const double c = 0.7;
  auto s = SampledFunction::sample([c](double x) { return cplx(std::exp(-(x - c) * (x - c))); }, grid);
  CHECK(max_err(T.forward(s), [c](double y) { return std::exp(-I * c * y) * std::exp(-y * y / 4) / std::sqrt(2.0); }) <
        1e-11);
}

TEST_CASE("scaling rule on Gaussians") {
  for (double k : {0.5, 1.5}) {
    auto grid = make_grid(k, 512, 20.0);
    DunklTransform1D T(grid);
    const double N = 2 * k + 1;
    for (double s : {0.5, 2.0}) {
      // f(x) = e^{-(s x)^2/2} has transform s^{-N} e^{-(y/s)^2/2}
      auto f = SampledFunction::sample([s](double x) { return cplx(std::exp(-s * s * x * x / 2)); }, grid, Parity::even);
      CHECK(max_err(T.forward(f), [s, N](double y) { return cplx(std::pow(s, -N) * std::exp(-y * y / (2 * s * s))); }) <
            1e-9);
    }
  }
}

TEST_CASE("round trip and Plancherel") {
  for (double k : {0.0, 0.25, 1.0, 2.5}) {
    CAPTURE(k);
    auto grid = make_grid(k);
    DunklTransform1D T(grid);
    auto f = SampledFunction::sample([](double x) { return cplx(x * std::exp(-x * x)); }, grid);
    auto back = T.inverse(T.forward(f));
    CHECK(max_abs_diff(back, f) < 1e-7);
    auto g = SampledFunction::sample([](double x) { return cplx(std::exp(-x * x / 2)); }, grid);
    CHECK(plancherel_norm(T.forward(g)) == doctest::Approx(plancherel_norm(g)).epsilon(1e-8));
    // Gaussian L^2 norm closed form: int e^{-x^2} |x|^{2k} = Gamma(k+1/2)
    CHECK(plancherel_norm(g) == doctest::Approx(std::sqrt(std::tgamma(k + 0.5))).epsilon(1e-12));
    auto z = SampledFunction::sample([](double) { return cplx(0.0); }, grid);
    CHECK(plancherel_norm(T.forward(z)) == 0.0);
  }
}

TEST_CASE("pointwise evaluation matches the tabulated transform") {
  auto grid = make_grid(0.75);
  DunklTransform1D T(grid);
  auto f = SampledFunction::sample([](double x) { return cplx(std::exp(-(x - 0.4) * (x - 0.4))); }, grid);
  const auto F = T.forward(f);
  for (std::size_t j : {5ul, 100ul, 200ul}) {
    CHECK(std::abs(T.forward_at(f, grid->nodes()[j]) - F.values[j]) < 1e-13);
    CHECK(std::abs(T.inverse_at(F, grid->nodes()[j]) - f.values[j]) < 1e-7);
  }
}

TEST_CASE("Dunkl derivative and Laplacian") {
  const double k = 0.8;
  auto grid = make_grid(k);
  auto x = SampledFunction::sample([](double t) { return cplx(t); }, grid, Parity::odd);
  CHECK(max_err(dunkl_derivative_1d(x), [k](double) { return cplx(1 + 2 * k); }) < 1e-10);
  auto g = SampledFunction::sample([](double t) { return cplx(std::exp(-t * t / 2)); }, grid, Parity::even);
  CHECK(max_err(dunkl_derivative_1d(g), [](double t) { return cplx(-t * std::exp(-t * t / 2)); }) < 1e-8);

  auto grid0 = make_grid(0.0);
  DunklTransform1D T0(grid0);
  auto g0 = SampledFunction::sample([](double t) { return cplx(std::exp(-t * t / 2)); }, grid0, Parity::even);
  CHECK(max_err(dunkl_laplacian_spectral(g0, T0), [](double t) { return cplx((t * t - 1) * std::exp(-t * t / 2)); }) <
        1e-9);

  DunklTransform1D T(grid);
  auto f = SampledFunction::sample([](double t) { return cplx(std::exp(-(t - 0.3) * (t - 0.3))); }, grid);
  const auto spectral = dunkl_laplacian_spectral(f, T);
  const auto direct = dunkl_derivative_1d(dunkl_derivative_1d(f));
  CHECK(max_abs_diff(spectral, direct) < 1e-6);
}

TEST_CASE("intertwining operator") {
  for (double k : {0.0, 0.3, 1.0, 2.5}) {
    CAPTURE(k);
    CHECK(intertwine_1d([](double) { return 1.0; }, k, 0.7) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(intertwine_1d([](double t) { return t; }, k, 0.7) == doctest::Approx(0.7 / (2 * k + 1)).epsilon(1e-14));
    CHECK(intertwine_1d([](double t) { return std::exp(-t * t) * (1 + t); }, k, 1.3) >= 0.0);
    // D V = V d/dx on monomials up to degree 6
    const double x = 0.9;
    for (int n = 1; n <= 6; ++n) {
      const double cn = intertwine_1d([n](double t) { return std::pow(t, n); }, k, 1.0);
      CHECK(cn == doctest::Approx(intertwine_moment(k, n)).epsilon(1e-12));
      const double Dfactor = n + k * (n % 2 == 1 ? 2.0 : 0.0);
      const double lhs = cn * Dfactor * std::pow(x, n - 1);
      const double rhs = intertwine_1d([n](double t) { return n * std::pow(t, n - 1); }, k, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
  }
  const auto params = MultiplicityParams({0.5, 0.0, 1.5});
  const double pt[3] = {0.4, -1.2, 2.0};
  const double v = intertwine_z2d([](std::span<const double> t) { return t[0] * t[1] * t[2]; }, params, pt);
  CHECK(v == doctest::Approx(0.4 / 2 * -1.2 * 2.0 / 4).epsilon(1e-13));
}

TEST_CASE("tensor transform for Z_2^2") {
  std::vector<GridPtr> grids{make_grid(0.5, 128, 10.0), make_grid(1.0, 128, 10.0)};
  std::vector<DunklTransform1D> axes{DunklTransform1D(grids[0]), DunklTransform1D(grids[1])};
  auto f = TensorSample::sample([](std::span<const double> x) { return cplx(std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2)); },
                                grids);
  auto F = dunkl_transform_nd(f, axes);
  double err = 0.0;
  for (std::size_t i = 0; i < F.values.size(); ++i) err = std::max(err, std::abs(F.values[i] - f.values[i]));
  CHECK(err < 1e-8);
  CHECK(plancherel_norm(F) == doctest::Approx(plancherel_norm(f)).epsilon(1e-9));
  auto back = dunkl_transform_nd(F, axes, true);
  err = 0.0;
  for (std::size_t i = 0; i < back.values.size(); ++i) err = std::max(err, std::abs(back.values[i] - f.values[i]));
  CHECK(err < 1e-8);
}

TEST_CASE("sampled function invariants") {
  auto grid = make_grid(0.5, 64, 8.0);
  CHECK_THROWS_AS(SampledFunction::from_values(grid, std::vector<cplx>(3)), std::invalid_argument);
  std::vector<cplx> v(grid->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = grid->nodes()[i];
  CHECK_THROWS_AS(SampledFunction::from_values(grid, v, Parity::even), std::invalid_argument);
  CHECK_NOTHROW(SampledFunction::from_values(grid, v, Parity::odd));
  CHECK(detect_parity(*grid, v) == Parity::odd);
  DunklTransform1D T(grid);
  auto other = make_grid(0.5, 128, 8.0);
  CHECK_THROWS_AS(T.forward(SampledFunction::sample([](double) { return cplx(1.0); }, other)), std::invalid_argument);
}
