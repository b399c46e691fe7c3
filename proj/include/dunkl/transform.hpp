#pragma once

// Sampled functions on symmetric line grids, the rank-one Dunkl transform and
// its inverse as dense quadrature sums, the rank-one Dunkl derivative and
// Laplacian, and the intertwining operator for Z_2^d.

#include "dunkl/functions.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace dunkl {

using GridPtr = std::shared_ptr<const LineGrid>;

GridPtr make_grid(double kappa, int n = 256, double cutoff = 12.0, int points_per_panel = 16);

/// Parity of tabulated values on a symmetric grid, up to a relative tolerance.
Parity detect_parity(const LineGrid& grid, std::span<const cplx> values, double tol = 1e-12);

/// Values of a function at the nodes of a line grid. Transforms live on the
/// same type, tabulated on a frequency grid.
struct SampledFunction {
  GridPtr grid;
  std::vector<cplx> values;
  Parity parity = Parity::none;

  static SampledFunction sample(const Function1D& f, GridPtr grid);
  static SampledFunction sample(const std::function<cplx(double)>& f, GridPtr grid, Parity parity = Parity::none);
  /// Validates length and the declared parity.
  static SampledFunction from_values(GridPtr grid, std::vector<cplx> values, Parity parity = Parity::none);

  double kappa() const { return grid->kappa(); }
  std::size_t size() const { return values.size(); }
  double sup_norm() const;
  std::vector<double> real_part() const;
  /// Throws std::invalid_argument when the invariants are violated.
  void validate(double tol = 1e-12) const;
};
using SpectralFunction = SampledFunction;

/// Max |a - b| over nodes; throws on grid mismatch.
double max_abs_diff(const SampledFunction& a, const SampledFunction& b);

class DunklTransform1D {
 public:
  /// The frequency grid defaults to the space grid.
  explicit DunklTransform1D(GridPtr space, GridPtr freq = nullptr);

  double kappa() const { return kappa_; }
  double c_h() const { return c_h_; }
  const GridPtr& space() const { return space_; }
  const GridPtr& freq() const { return freq_; }

  /// f^(y) = c_h int f(x) E(x, -iy) |x|^{2 kappa} dx at the frequency nodes.
  SpectralFunction forward(const SampledFunction& f) const;
  /// f(x) = c_h int F(y) E(x, iy) |y|^{2 kappa} dy at the space nodes.
  SampledFunction inverse(const SpectralFunction& F) const;
  cplx forward_at(const SampledFunction& f, double y) const;
  cplx inverse_at(const SpectralFunction& F, double x) const;

  /// inverse(m * forward(f)).
  SampledFunction apply_multiplier(const SampledFunction& f, const std::function<cplx(double)>& m) const;

 private:
  struct Sums {
    std::vector<cplx> even, odd;
  };
  std::vector<cplx> combine(const SampledFunction& f, bool odd_part) const;

  GridPtr space_, freq_;
  double kappa_;
  double c_h_;
  std::size_t hx_, hy_;
  // kernel_even_[j * hx_ + k] = j_{k-1/2}(x_k y_j), kernel_odd_ likewise for x y/(2k+1) j_{k+1/2}(x y)
  std::vector<double> kernel_even_, kernel_odd_;
};

/// (int |f|^p |x|^{2 kappa} dx)^{1/p} by the grid quadrature; p = 2 is the Plancherel norm.
double lp_norm(const SampledFunction& f, double p);
inline double plancherel_norm(const SampledFunction& f) { return lp_norm(f, 2.0); }

/// D f = f' + kappa (f(x) - f(-x)) / x with the panel-wise spectral derivative.
SampledFunction dunkl_derivative_1d(const SampledFunction& f);
/// Delta f = inverse(-|y|^2 f^).
SampledFunction dunkl_laplacian_spectral(const SampledFunction& f, const DunklTransform1D& transform);

/// V_k f(x) = b_k int f(x_1 t_1, ..., x_d t_d) prod (1+t_i)(1-t_i^2)^{k_i-1} dt by
/// tensor Gauss-Jacobi quadrature; axes with k_i = 0 act as the identity.
double intertwine_z2d(const std::function<double(std::span<const double>)>& f, const MultiplicityParams& params,
                      std::span<const double> x, int points = 32);
double intertwine_1d(const std::function<double(double)>& f, double kappa, double x, int points = 32);

/// Tensor-product samples for Z_2^d, row-major with the last axis fastest.
struct TensorSample {
  std::vector<GridPtr> grids;
  std::vector<cplx> values;
  static TensorSample sample(const std::function<cplx(std::span<const double>)>& f, std::vector<GridPtr> grids);
};

/// Transform axis by axis; the product kernel makes this exact.
TensorSample dunkl_transform_nd(const TensorSample& f, const std::vector<DunklTransform1D>& axes, bool inverse = false);
double plancherel_norm(const TensorSample& f);

}  // namespace dunkl
