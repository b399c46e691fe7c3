#include "dunkl/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {

constexpr cplx I{0.0, 1.0};

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (!a.grid || !b.grid) throw std::invalid_argument("sampled function without grid");
  if (a.grid != b.grid && !a.grid->same_layout(*b.grid)) throw std::invalid_argument("grid mismatch");
}

}  // namespace

GridPtr make_grid(double kappa, int n, double cutoff, int points_per_panel) {
  return std::make_shared<const LineGrid>(kappa, n, cutoff, points_per_panel);
}

Parity detect_parity(const LineGrid& grid, std::span<const cplx> values, double tol) {
  double sup = 0.0, even_defect = 0.0, odd_defect = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const cplx a = values[i], b = values[grid.mirror(i)];
    sup = std::max(sup, std::abs(a));
    even_defect = std::max(even_defect, std::abs(a - b));
    odd_defect = std::max(odd_defect, std::abs(a + b));
  }
  if (even_defect <= tol * sup) return Parity::even;
  if (odd_defect <= tol * sup) return Parity::odd;
  return Parity::none;
}

SampledFunction SampledFunction::sample(const Function1D& f, GridPtr grid) {
  SampledFunction out;
  out.values.resize(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = f(grid->nodes()[i]);
  out.parity = f.parity();
  out.grid = std::move(grid);
  return out;
}

SampledFunction SampledFunction::sample(const std::function<cplx(double)>& f, GridPtr grid, Parity parity) {
  SampledFunction out;
  out.values.resize(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = f(grid->nodes()[i]);
  out.parity = parity;
  out.grid = std::move(grid);
  return out;
}

SampledFunction SampledFunction::from_values(GridPtr grid, std::vector<cplx> values, Parity parity) {
  SampledFunction out{std::move(grid), std::move(values), parity};
  out.validate();
  return out;
}

double SampledFunction::sup_norm() const {
  double s = 0.0;
  for (const auto& v : values) s = std::max(s, std::abs(v));
  return s;
}

std::vector<double> SampledFunction::real_part() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
  return out;
}

void SampledFunction::validate(double tol) const {
  if (!grid) throw std::invalid_argument("SampledFunction: missing grid");
  if (values.size() != grid->size()) throw std::invalid_argument("SampledFunction: values length differs from grid size");
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw std::invalid_argument("SampledFunction: non-finite value");
  }
  if (parity == Parity::none) return;
  const double scale = std::max(1.0, sup_norm());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const cplx m = values[grid->mirror(i)];
    const double defect = parity == Parity::even ? std::abs(values[i] - m) : std::abs(values[i] + m);
    if (defect > tol * scale) {
      throw std::invalid_argument(std::string("SampledFunction: values are not ") + parity_name(parity));
    }
  }
}

double max_abs_diff(const SampledFunction& a, const SampledFunction& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

DunklTransform1D::DunklTransform1D(GridPtr space, GridPtr freq)
    : space_(std::move(space)), freq_(freq ? std::move(freq) : space_) {
  if (!space_) throw std::invalid_argument("DunklTransform1D: missing space grid");
  kappa_ = space_->kappa();
  if (freq_->kappa() != kappa_) throw std::invalid_argument("DunklTransform1D: grids built for different kappa");
  c_h_ = Constants(MultiplicityParams::line(kappa_)).c_h();
  hx_ = space_->half();
  hy_ = freq_->half();
  kernel_even_.resize(hx_ * hy_);
  kernel_odd_.resize(hx_ * hy_);
  const double ae = kappa_ - 0.5, ao = kappa_ + 0.5;
  for (std::size_t j = 0; j < hy_; ++j) {
    const double y = freq_->positive_node(j);
    for (std::size_t k = 0; k < hx_; ++k) {
      const double z = space_->positive_node(k) * y;
      kernel_even_[j * hx_ + k] = normalized_bessel_j(ae, z);
      kernel_odd_[j * hx_ + k] = z / (2.0 * kappa_ + 1.0) * normalized_bessel_j(ao, z);
    }
  }
}

std::vector<cplx> DunklTransform1D::combine(const SampledFunction& f, bool odd_part) const {
  const LineGrid& g = *f.grid;
  const std::size_t h = g.half();
  std::vector<cplx> out(h);
  for (std::size_t k = 0; k < h; ++k) {
    const cplx plus = f.values[h + k], minus = f.values[h - 1 - k];
    out[k] = g.positive_weight(k) * (odd_part ? plus - minus : plus + minus);
  }
  return out;
}

SpectralFunction DunklTransform1D::forward(const SampledFunction& f) const {
  if (!f.grid || !(f.grid == space_ || f.grid->same_layout(*space_))) {
    throw std::invalid_argument("DunklTransform1D::forward: grid mismatch");
  }
  const bool need_even = f.parity != Parity::odd;
  const bool need_odd = f.parity != Parity::even;
  const auto P = need_even ? combine(f, false) : std::vector<cplx>(hx_);
  const auto Q = need_odd ? combine(f, true) : std::vector<cplx>(hx_);
  SpectralFunction out;
  out.grid = freq_;
  out.parity = f.parity;
  out.values.assign(freq_->size(), 0.0);
  for (std::size_t j = 0; j < hy_; ++j) {
    cplx se = 0.0, so = 0.0;
    const double* ke = &kernel_even_[j * hx_];
    const double* ko = &kernel_odd_[j * hx_];
    if (need_even) {
      for (std::size_t k = 0; k < hx_; ++k) se += P[k] * ke[k];
    }
    if (need_odd) {
      for (std::size_t k = 0; k < hx_; ++k) so += Q[k] * ko[k];
    }
    out.values[hy_ + j] = c_h_ * (se - I * so);
    out.values[hy_ - 1 - j] = c_h_ * (se + I * so);
  }
  return out;
}

SampledFunction DunklTransform1D::inverse(const SpectralFunction& F) const {
  if (!F.grid || !(F.grid == freq_ || F.grid->same_layout(*freq_))) {
    throw std::invalid_argument("DunklTransform1D::inverse: grid mismatch");
  }
  const bool need_even = F.parity != Parity::odd;
  const bool need_odd = F.parity != Parity::even;
  const auto P = need_even ? combine(F, false) : std::vector<cplx>(hy_);
  const auto Q = need_odd ? combine(F, true) : std::vector<cplx>(hy_);
  std::vector<cplx> te(hx_, 0.0), to(hx_, 0.0);
  for (std::size_t j = 0; j < hy_; ++j) {
    const double* ke = &kernel_even_[j * hx_];
    const double* ko = &kernel_odd_[j * hx_];
    if (need_even) {
      for (std::size_t k = 0; k < hx_; ++k) te[k] += P[j] * ke[k];
    }
    if (need_odd) {
      for (std::size_t k = 0; k < hx_; ++k) to[k] += Q[j] * ko[k];
    }
  }
  SampledFunction out;
  out.grid = space_;
  out.parity = F.parity;
  out.values.assign(space_->size(), 0.0);
  for (std::size_t k = 0; k < hx_; ++k) {
    out.values[hx_ + k] = c_h_ * (te[k] + I * to[k]);
    out.values[hx_ - 1 - k] = c_h_ * (te[k] - I * to[k]);
  }
  return out;
}

cplx DunklTransform1D::forward_at(const SampledFunction& f, double y) const {
  const LineGrid& g = *f.grid;
  cplx s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.weights()[i] * f.values[i] * std::conj(dunkl_kernel_1d(kappa_, g.nodes()[i], y));
  return c_h_ * s;
}

cplx DunklTransform1D::inverse_at(const SpectralFunction& F, double x) const {
  const LineGrid& g = *F.grid;
  cplx s = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) s += g.weights()[j] * F.values[j] * dunkl_kernel_1d(kappa_, x, g.nodes()[j]);
  return c_h_ * s;
}

SampledFunction DunklTransform1D::apply_multiplier(const SampledFunction& f, const std::function<cplx(double)>& m) const {
  SpectralFunction F = forward(f);
  for (std::size_t j = 0; j < F.size(); ++j) F.values[j] *= m(F.grid->nodes()[j]);
  F.parity = detect_parity(*F.grid, F.values, 1e-13);
  return inverse(F);
}

double lp_norm(const SampledFunction& f, double p) {
  if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1");
  const auto& w = f.grid->weights();
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * std::pow(std::abs(f.values[i]), p);
  return std::pow(s, 1.0 / p);
}

SampledFunction dunkl_derivative_1d(const SampledFunction& f) {
  const LineGrid& g = *f.grid;
  auto d = g.differentiate(f.values);
  const double kappa = g.kappa();
  for (std::size_t i = 0; i < g.size(); ++i) {
    d[i] += kappa * (f.values[i] - f.values[g.mirror(i)]) / g.nodes()[i];
  }
  SampledFunction out{f.grid, std::move(d), Parity::none};
  if (f.parity == Parity::even) out.parity = Parity::odd;
  if (f.parity == Parity::odd) out.parity = Parity::even;
  return out;
}

SampledFunction dunkl_laplacian_spectral(const SampledFunction& f, const DunklTransform1D& transform) {
  SpectralFunction F = transform.forward(f);
  for (std::size_t j = 0; j < F.size(); ++j) {
    const double y = F.grid->nodes()[j];
    F.values[j] *= -y * y;
  }
  return transform.inverse(F);
}

namespace {

double intertwine_axis(const std::function<double(std::span<const double>)>& f, const MultiplicityParams& params,
                       std::span<const double> x, std::vector<double>& arg, std::size_t axis, int points) {
  if (axis == x.size()) return f(arg);
  const double k = params.kappa(axis);
  if (k == 0.0) {
    arg[axis] = x[axis];
    return intertwine_axis(f, params, x, arg, axis + 1, points);
  }
  const QuadratureRule& rule = cached_gauss_jacobi(points, k - 1.0, k);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    arg[axis] = x[axis] * rule.nodes[i];
    s += rule.weights[i] * intertwine_axis(f, params, x, arg, axis + 1, points);
  }
  return b_kappa(k) * s;
}

}  // namespace

double intertwine_z2d(const std::function<double(std::span<const double>)>& f, const MultiplicityParams& params,
                      std::span<const double> x, int points) {
  if (x.size() != params.dim()) throw std::invalid_argument("intertwine_z2d: point dimension mismatch");
  std::vector<double> arg(x.size());
  return intertwine_axis(f, params, x, arg, 0, points);
}

double intertwine_1d(const std::function<double(double)>& f, double kappa, double x, int points) {
  const double xs[1] = {x};
  return intertwine_z2d([&f](std::span<const double> t) { return f(t[0]); }, MultiplicityParams::line(kappa), xs,
                        points);
}

TensorSample TensorSample::sample(const std::function<cplx(std::span<const double>)>& f, std::vector<GridPtr> grids) {
  TensorSample out;
  std::size_t total = 1;
  for (const auto& g : grids) total *= g->size();
  out.values.resize(total);
  std::vector<double> pt(grids.size());
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t a = grids.size(); a-- > 0;) {
      pt[a] = grids[a]->nodes()[rem % grids[a]->size()];
      rem /= grids[a]->size();
    }
    out.values[idx] = f(pt);
  }
  out.grids = std::move(grids);
  return out;
}

TensorSample dunkl_transform_nd(const TensorSample& f, const std::vector<DunklTransform1D>& axes, bool inverse) {
  if (axes.size() != f.grids.size()) throw std::invalid_argument("dunkl_transform_nd: axis count mismatch");
  TensorSample cur = f;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const GridPtr& in_grid = inverse ? axes[a].freq() : axes[a].space();
    const GridPtr& out_grid = inverse ? axes[a].space() : axes[a].freq();
    if (!cur.grids[a]->same_layout(*in_grid)) throw std::invalid_argument("dunkl_transform_nd: grid mismatch");
    std::size_t inner = 1;
    for (std::size_t b = a + 1; b < cur.grids.size(); ++b) inner *= cur.grids[b]->size();
    const std::size_t n_in = in_grid->size(), n_out = out_grid->size();
    const std::size_t outer = cur.values.size() / (n_in * inner);
    std::vector<cplx> next(outer * n_out * inner);
    SampledFunction fiber{in_grid, std::vector<cplx>(n_in), Parity::none};
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < inner; ++i) {
        for (std::size_t k = 0; k < n_in; ++k) fiber.values[k] = cur.values[(o * n_in + k) * inner + i];
        const SampledFunction res = inverse ? axes[a].inverse(fiber) : axes[a].forward(fiber);
        for (std::size_t k = 0; k < n_out; ++k) next[(o * n_out + k) * inner + i] = res.values[k];
      }
    }
    cur.values = std::move(next);
    cur.grids[a] = out_grid;
  }
  return cur;
}

double plancherel_norm(const TensorSample& f) {
  double s = 0.0;
  const std::size_t total = f.values.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    double w = 1.0;
    for (std::size_t a = f.grids.size(); a-- > 0;) {
      w *= f.grids[a]->weights()[rem % f.grids[a]->size()];
      rem /= f.grids[a]->size();
    }
    s += w * std::norm(f.values[idx]);
  }
  return std::sqrt(s);
}

}  // namespace dunkl
