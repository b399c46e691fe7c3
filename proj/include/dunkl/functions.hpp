#pragma once

// Real functions on the line with the metadata the integrators need: an
// even/odd split on radii, a length scale, a reach beyond which the function
// is negligible and the radii where it is not smooth.

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

enum class Parity { even, odd, none };

const char* parity_name(Parity p);

/// f(r) = even(r) + r * odd_over_r(r) for r >= 0 and f(-r) = even(r) - r * odd_over_r(r).
struct RadialParts {
  double even = 0.0;
  double odd_over_r = 0.0;
};

class Function1D {
 public:
  using Eval = std::function<double(double)>;
  using PartsFn = std::function<RadialParts(double)>;

  Function1D() = default;
  Function1D(std::string name, Eval f, double length_scale,
             double reach = std::numeric_limits<double>::infinity());

  Function1D& with_parts(PartsFn p);
  Function1D& with_derivative(Eval d);
  Function1D& with_breakpoints(std::vector<double> radii);
  Function1D& with_parity(Parity p);
  /// Local length scale grows like length_scale + growth * r (power-law tails).
  Function1D& with_scale_growth(double growth);
  Function1D& with_reach(double reach);

  double operator()(double x) const { return f_(x); }
  RadialParts parts(double r) const;
  bool has_derivative() const { return static_cast<bool>(df_); }
  double derivative(double x) const;

  const std::string& name() const { return name_; }
  double length_scale() const { return scale_; }
  double length_scale_at(double r) const { return scale_ + growth_ * r; }
  double scale_growth() const { return growth_; }
  double reach() const { return reach_; }
  const std::vector<double>& breakpoints() const { return breaks_; }
  Parity parity() const { return parity_; }
  bool valid() const { return static_cast<bool>(f_); }

  /// x -> f(-x).
  Function1D reflected() const;
  /// x -> c f(x).
  Function1D scaled(double c) const;

 private:
  std::string name_;
  Eval f_;
  Eval df_;
  PartsFn parts_;
  double scale_ = 1.0;
  double growth_ = 0.0;
  double reach_ = std::numeric_limits<double>::infinity();
  std::vector<double> breaks_;
  Parity parity_ = Parity::none;
};

namespace families {

/// e^{-s^2 x^2}.
Function1D gaussian(double s = 1.0);
/// H_n(s x) e^{-s^2 x^2 / 2} with physicists' Hermite polynomials.
Function1D hermite_gaussian(int n, double s = 1.0);
/// exp(-1/(1-(x/B)^2)) on |x| < B, zero outside.
Function1D bump(double B = 1.0);
/// Indicator of [-B, B].
Function1D indicator(double B = 1.0);
/// x e^{-s^2 x^2}.
Function1D odd_gaussian(double s = 1.0);
/// e^{-s^2 (x-c)^2}, neither even nor odd.
Function1D shifted_gaussian(double c, double s = 1.0);
/// x^n e^{-s^2 x^2}.
Function1D monomial_gaussian(int n, double s = 1.0);
/// cos(w x) e^{-s^2 x^2}.
Function1D modulated_gaussian(double w, double s = 1.0);

/// Parse "gaussian(1)", "hermite-gaussian(2,1)", "bump(1)", "indicator(1)",
/// "odd-gaussian(1)", "shifted-gaussian(0.5,1)". Throws std::invalid_argument.
Function1D parse(const std::string& spec);

}  // namespace families

}  // namespace dunkl
