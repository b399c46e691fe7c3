#pragma once

// Piecewise Chebyshev tables for radial profiles f0(r) and for functions on
// the line stored as (even part, odd part / r), with an optional power-law
// tail beyond the tabulated range.

#include "dunkl/functions.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace dunkl {

class ChebyshevTable {
 public:
  ChebyshevTable() = default;
  ChebyshevTable(std::vector<double> breaks, int points_per_panel);

  /// Sample points, panel by panel (first-kind Chebyshev nodes, endpoints excluded).
  std::vector<double> nodes() const;
  void set_values(std::span<const double> values);
  static ChebyshevTable build(std::vector<double> breaks, int points, const std::function<double(double)>& f);

  /// Value or derivative (order 0..2) of the interpolant; u is clamped to [lo, hi].
  double eval(double u, int order = 0) const;
  double operator()(double u) const { return eval(u, 0); }
  double lo() const { return breaks_.front(); }
  double hi() const { return breaks_.back(); }
  const std::vector<double>& breaks() const { return breaks_; }
  int points() const { return n_; }
  bool empty() const { return coef_.empty(); }

 private:
  std::size_t panel_of(double u) const;
  std::vector<double> breaks_;
  int n_ = 0;
  std::vector<std::vector<double>> coef_;   // per panel
  std::vector<std::vector<double>> dcoef_;  // first derivative coefficients (panel variable)
  std::vector<std::vector<double>> d2coef_;
};

struct ProfileLayout {
  double scale = 1.0;   // unit panels of this width up to inner*scale
  double inner = 8.0;
  double outer = 128.0;  // geometric doubling panels up to outer*scale
  int points = 20;
  std::vector<double> breaks() const;
};

/// f(r) ~ r^{-p} (c0 + c1 r^{-2} + c2 r^{-4}) beyond `start`.
struct PowerTail {
  double exponent = 0.0;
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double start = 0.0;
  double eval(double r, int order = 0) const;
};

class RadialProfile {
 public:
  RadialProfile() = default;
  static RadialProfile tabulate(const std::function<double(double)>& f0, const ProfileLayout& layout,
                                std::optional<double> tail_exponent = std::nullopt);
  static RadialProfile from_table(ChebyshevTable table, std::optional<double> tail_exponent);
  static RadialProfile zero();

  double operator()(double r) const { return eval(r, 0); }
  double eval(double r, int order = 0) const;
  double table_end() const { return zero_ ? 0.0 : table_.hi(); }
  bool has_tail() const { return tail_.has_value(); }
  bool is_zero() const { return zero_; }
  const ChebyshevTable& table() const { return table_; }
  const std::optional<PowerTail>& tail() const { return tail_; }

 private:
  ChebyshevTable table_;
  std::optional<PowerTail> tail_;
  bool zero_ = false;
};

/// F(x) = even(|x|) + x * odd_over_r(|x|).
class LineProfile {
 public:
  using BatchEval = std::function<std::vector<double>(const std::vector<double>&)>;

  LineProfile() = default;
  LineProfile(RadialProfile even, RadialProfile odd_over_r, Parity parity, double scale);

  /// Tabulate F at the profile nodes (both signs unless the parity rules one out).
  static LineProfile tabulate(const BatchEval& F, Parity parity, const ProfileLayout& layout,
                              std::optional<double> even_tail_exponent = std::nullopt,
                              std::optional<double> odd_tail_exponent = std::nullopt);
  static LineProfile tabulate(const std::function<double(double)>& F, Parity parity, const ProfileLayout& layout,
                              std::optional<double> even_tail_exponent = std::nullopt,
                              std::optional<double> odd_tail_exponent = std::nullopt);

  double operator()(double x) const;
  RadialParts parts(double r) const;
  const RadialProfile& even() const { return even_; }
  const RadialProfile& odd_over_r() const { return odd_; }
  Parity parity() const { return parity_; }

  /// Function handle sharing this table; reach is infinite when a tail is present.
  Function1D as_function(const std::string& name) const;

  /// (int |F|^p |x|^{2 kappa} dx)^{1/p} over the whole line, tail included.
  double lp_norm(double p, double kappa) const;

  /// Rank-one Dunkl derivative and Laplacian of the tabulated function.
  double dunkl_derivative(double x, double kappa) const;
  double dunkl_laplacian(double x, double kappa) const;

 private:
  RadialProfile even_;
  RadialProfile odd_;
  Parity parity_ = Parity::none;
  double scale_ = 1.0;
};

}  // namespace dunkl
