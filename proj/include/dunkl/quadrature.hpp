#pragma once

// Gauss rules, graded composite rules and the symmetric line grid used to
// tabulate functions for the transform and the operators built on it.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dunkl {

enum class WeightKind { unit, jacobi, radial_power, mapped_line };

/// Nodes and weights for integral(f(t) w(t) dt, lo..hi); the weight function w
/// is already folded into `weights`.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = -1.0;
  double hi = 1.0;
  WeightKind kind = WeightKind::unit;
  double a = 0.0;  // jacobi: exponent at hi; radial_power / mapped_line: power of the weight
  double b = 0.0;  // jacobi: exponent at lo
  int exactness = 0;  // polynomial degree integrated exactly (0 when not meaningful)

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// n-point rule for integral(f(t) (1-t)^a (1+t)^b dt, -1..1).
QuadratureRule gauss_jacobi(int n, double a, double b);

/// Cached copies of the two rules above (thread-safe, immutable once built).
const QuadratureRule& cached_gauss_legendre(int n);
const QuadratureRule& cached_gauss_jacobi(int n, double a, double b);

/// Affine image of a rule on [-1, 1] onto [lo, hi]; weights carry |jacobian|
/// (and, for Jacobi rules, the power of the scaled weight).
QuadratureRule map_rule(const QuadratureRule& ref, double lo, double hi);

/// Rule for integral(f(r) r^beta dr, 0..h) exact for polynomial f of degree 2n-1.
QuadratureRule power_rule(int n, double h, double beta);

struct RadialGrid {
  double cutoff = 8.0;
  int levels = 20;         // geometric panels toward r = 0
  int points_per_panel = 16;
  double ratio = 0.5;      // successive panel scale factor toward 0
};

/// Graded composite rule for integral(f(r) r^beta dr, 0..R): geometric panels
/// toward 0, a Gauss-Jacobi rule on the innermost panel, Gauss-Legendre times
/// r^beta elsewhere.
QuadratureRule radial_rule(const RadialGrid& grid, double beta);

/// Composite Gauss-Legendre rule on [lo, hi] with panels separated by `breaks`.
QuadratureRule composite_legendre(std::span<const double> breaks, int points_per_panel);

std::complex<double> integrate(const QuadratureRule& rule, std::span<const std::complex<double>> values);
double integrate(const QuadratureRule& rule, std::span<const double> values);
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

/// Symmetric grid on [-X, X]: the half line [0, X] is split into equal panels,
/// the first uses a Gauss-Jacobi rule for |x|^{2 kappa} and the others
/// Gauss-Legendre times |x|^{2 kappa}. Nodes never include 0.
class LineGrid {
 public:
  LineGrid(double kappa, int n = 256, double cutoff = 12.0, int points_per_panel = 16);

  double kappa() const { return kappa_; }
  double cutoff() const { return cutoff_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t half() const { return half_; }
  int points_per_panel() const { return ppp_; }
  std::size_t panels() const { return panel_breaks_.size() - 1; }

  /// Increasing nodes; node i and node size()-1-i are negatives of each other.
  const std::vector<double>& nodes() const { return nodes_; }
  /// Weights for integral(f(x) |x|^{2 kappa} dx).
  const std::vector<double>& weights() const { return weights_; }
  /// Weights for integral(f(x) dx) on the same nodes.
  const std::vector<double>& plain_weights() const { return plain_weights_; }
  /// Index of the node -x_i.
  std::size_t mirror(std::size_t i) const { return size() - 1 - i; }
  /// Positive half nodes x_k (k = 0..half-1, increasing) map to index half + k.
  double positive_node(std::size_t k) const { return nodes_[half_ + k]; }
  double positive_weight(std::size_t k) const { return weights_[half_ + k]; }

  QuadratureRule rule() const;

  /// Panel-wise barycentric interpolation of tabulated values at an arbitrary point.
  double interpolate(std::span<const double> values, double x) const;
  std::complex<double> interpolate(std::span<const std::complex<double>> values, double x) const;
  /// Derivative of the panel-wise interpolant at every node.
  std::vector<std::complex<double>> differentiate(std::span<const std::complex<double>> values) const;
  std::vector<double> differentiate(std::span<const double> values) const;

  bool same_layout(const LineGrid& other) const;

 private:
  std::size_t locate_panel(double x) const;  // panel index on the signed line

  double kappa_;
  double cutoff_;
  int ppp_;
  std::size_t half_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> plain_weights_;
  std::vector<double> panel_breaks_;           // signed panel boundaries, increasing
  std::vector<std::vector<double>> bary_;      // barycentric weights per signed panel
  std::vector<std::vector<double>> dmat_;      // row-major differentiation matrix per panel
};

}  // namespace dunkl
