#include "dunkl/profile.hpp"

#include "dunkl/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace dunkl {

namespace {

std::vector<double> cheb_derivative(const std::vector<double>& c) {
  const std::size_t n = c.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  // d_{k-1} = d_{k+1} + 2 k c_k, with d_0 halved at the end.
  for (std::size_t k = n - 1; k >= 1; --k) {
    const double next = (k + 1 < n) ? d[k + 1] : 0.0;
    d[k - 1] = next + 2.0 * static_cast<double>(k) * c[k];
    if (k == 1) break;
  }
  d[0] *= 0.5;
  return d;
}

double clenshaw(const std::vector<double>& c, double s) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = 2.0 * s * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return s * b1 - b2 + c[0];
}

}  // namespace

ChebyshevTable::ChebyshevTable(std::vector<double> breaks, int points_per_panel)
    : breaks_(std::move(breaks)), n_(points_per_panel) {
  if (breaks_.size() < 2) throw std::invalid_argument("ChebyshevTable: need at least one panel");
  if (n_ < 2) throw std::invalid_argument("ChebyshevTable: need at least two points per panel");
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i] > breaks_[i - 1])) throw std::invalid_argument("ChebyshevTable: breaks must increase");
  }
}

std::vector<double> ChebyshevTable::nodes() const {
  std::vector<double> out;
  out.reserve((breaks_.size() - 1) * static_cast<std::size_t>(n_));
  for (std::size_t p = 0; p + 1 < breaks_.size(); ++p) {
    const double mid = 0.5 * (breaks_[p] + breaks_[p + 1]);
    const double half = 0.5 * (breaks_[p + 1] - breaks_[p]);
    for (int j = 0; j < n_; ++j) out.push_back(mid + half * std::cos(std::numbers::pi * (j + 0.5) / n_));
  }
  return out;
}

void ChebyshevTable::set_values(std::span<const double> values) {
  const std::size_t np = breaks_.size() - 1;
  const std::size_t n = static_cast<std::size_t>(n_);
  if (values.size() != np * n) throw std::invalid_argument("ChebyshevTable: value count mismatch");
  coef_.assign(np, std::vector<double>(n, 0.0));
  dcoef_.assign(np, {});
  d2coef_.assign(np, {});
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        s += values[p * n + j] * std::cos(std::numbers::pi * static_cast<double>(k) * (j + 0.5) / n_);
      }
      coef_[p][k] = 2.0 * s / n_;
    }
    coef_[p][0] *= 0.5;
    dcoef_[p] = cheb_derivative(coef_[p]);
    d2coef_[p] = cheb_derivative(dcoef_[p]);
  }
}

ChebyshevTable ChebyshevTable::build(std::vector<double> breaks, int points, const std::function<double(double)>& f) {
  ChebyshevTable t(std::move(breaks), points);
  const auto u = t.nodes();
  std::vector<double> v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[i] = f(u[i]);
  t.set_values(v);
  return t;
}

std::size_t ChebyshevTable::panel_of(double u) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), u);
  std::size_t p = it == breaks_.begin() ? 0 : static_cast<std::size_t>(it - breaks_.begin()) - 1;
  return std::min(p, breaks_.size() - 2);
}

double ChebyshevTable::eval(double u, int order) const {
  if (coef_.empty()) throw std::logic_error("ChebyshevTable: values not set");
  u = std::clamp(u, lo(), hi());
  const std::size_t p = panel_of(u);
  const double mid = 0.5 * (breaks_[p] + breaks_[p + 1]);
  const double half = 0.5 * (breaks_[p + 1] - breaks_[p]);
  const double s = std::clamp((u - mid) / half, -1.0, 1.0);
  switch (order) {
    case 0: return clenshaw(coef_[p], s);
    case 1: return clenshaw(dcoef_[p], s) / half;
    case 2: return clenshaw(d2coef_[p], s) / (half * half);
    default: throw std::invalid_argument("ChebyshevTable: derivative order must be 0, 1 or 2");
  }
}

std::vector<double> ProfileLayout::breaks() const {
  if (!(scale > 0.0) || !(inner >= 1.0) || !(outer >= inner)) throw std::invalid_argument("ProfileLayout: bad extents");
  std::vector<double> b{0.0};
  const int ninner = static_cast<int>(std::ceil(inner - 1e-12));
  for (int i = 1; i <= ninner; ++i) b.push_back(scale * i);
  double r = scale * ninner;
  while (r < scale * outer * (1.0 - 1e-12)) {
    r = std::min(2.0 * r, scale * outer);
    b.push_back(r);
  }
  return b;
}

double PowerTail::eval(double r, int order) const {
  const double p = exponent;
  const double r2 = 1.0 / (r * r);
  switch (order) {
    case 0: return std::pow(r, -p) * (c0 + c1 * r2 + c2 * r2 * r2);
    case 1:
      return std::pow(r, -p - 1.0) * (-p * c0 - (p + 2.0) * c1 * r2 - (p + 4.0) * c2 * r2 * r2);
    case 2:
      return std::pow(r, -p - 2.0) *
             (p * (p + 1.0) * c0 + (p + 2.0) * (p + 3.0) * c1 * r2 + (p + 4.0) * (p + 5.0) * c2 * r2 * r2);
    default: throw std::invalid_argument("PowerTail: derivative order must be 0, 1 or 2");
  }
}

RadialProfile RadialProfile::from_table(ChebyshevTable table, std::optional<double> tail_exponent) {
  RadialProfile out;
  out.table_ = std::move(table);
  if (tail_exponent) {
    const double R = out.table_.hi();
    const double rs[3] = {R, R / 1.5, R / 2.25};
    Eigen::Matrix3d A;
    Eigen::Vector3d rhs;
    for (int i = 0; i < 3; ++i) {
      const double r2 = 1.0 / (rs[i] * rs[i]);
      A(i, 0) = 1.0;
      A(i, 1) = r2;
      A(i, 2) = r2 * r2;
      rhs[i] = out.table_(rs[i]) * std::pow(rs[i], *tail_exponent);
    }
    const Eigen::Vector3d c = A.fullPivLu().solve(rhs);
    out.tail_ = PowerTail{*tail_exponent, c[0], c[1], c[2], R};
  }
  return out;
}

RadialProfile RadialProfile::tabulate(const std::function<double(double)>& f0, const ProfileLayout& layout,
                                      std::optional<double> tail_exponent) {
  return from_table(ChebyshevTable::build(layout.breaks(), layout.points, f0), tail_exponent);
}

RadialProfile RadialProfile::zero() {
  RadialProfile out;
  out.zero_ = true;
  return out;
}

double RadialProfile::eval(double r, int order) const {
  if (zero_) return 0.0;
  r = std::abs(r);
  if (r > table_.hi()) return tail_ ? tail_->eval(r, order) : 0.0;
  return table_.eval(r, order);
}

LineProfile::LineProfile(RadialProfile even, RadialProfile odd_over_r, Parity parity, double scale)
    : even_(std::move(even)), odd_(std::move(odd_over_r)), parity_(parity), scale_(scale) {}

LineProfile LineProfile::tabulate(const BatchEval& F, Parity parity, const ProfileLayout& layout,
                                  std::optional<double> even_tail_exponent, std::optional<double> odd_tail_exponent) {
  ChebyshevTable even_t(layout.breaks(), layout.points);
  ChebyshevTable odd_t(layout.breaks(), layout.points);
  const auto r = even_t.nodes();
  std::vector<double> xs;
  xs.reserve(2 * r.size());
  xs.insert(xs.end(), r.begin(), r.end());
  if (parity == Parity::none) {
    for (double v : r) xs.push_back(-v);
  }
  const std::vector<double> vals = F(xs);
  if (vals.size() != xs.size()) throw std::runtime_error("LineProfile: batch evaluation returned wrong size");
  std::vector<double> e(r.size()), q(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double fp = vals[i];
    double fm;
    if (parity == Parity::even) {
      fm = fp;
    } else if (parity == Parity::odd) {
      fm = -fp;
    } else {
      fm = vals[r.size() + i];
    }
    e[i] = 0.5 * (fp + fm);
    q[i] = 0.5 * (fp - fm) / r[i];
  }
  RadialProfile ep = RadialProfile::zero(), op = RadialProfile::zero();
  if (parity != Parity::odd) {
    even_t.set_values(e);
    ep = RadialProfile::from_table(std::move(even_t), even_tail_exponent);
  }
  if (parity != Parity::even) {
    odd_t.set_values(q);
    op = RadialProfile::from_table(std::move(odd_t), odd_tail_exponent);
  }
  return LineProfile(std::move(ep), std::move(op), parity, layout.scale);
}

LineProfile LineProfile::tabulate(const std::function<double(double)>& F, Parity parity, const ProfileLayout& layout,
                                  std::optional<double> even_tail_exponent, std::optional<double> odd_tail_exponent) {
  BatchEval batch = [&F](const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = F(xs[i]);
    return out;
  };
  return tabulate(batch, parity, layout, even_tail_exponent, odd_tail_exponent);
}

double LineProfile::operator()(double x) const {
  const double r = std::abs(x);
  return even_(r) + x * odd_(r);
}

RadialParts LineProfile::parts(double r) const { return {even_(r), odd_(r)}; }

Function1D LineProfile::as_function(const std::string& name) const {
  auto self = std::make_shared<const LineProfile>(*this);
  const bool tail = (even_.has_tail() && !even_.is_zero()) || (odd_.has_tail() && !odd_.is_zero());
  double end = std::max(even_.table_end(), odd_.table_end());
  const double reach = tail ? std::numeric_limits<double>::infinity() : end;
  Function1D f(name, [self](double x) { return (*self)(x); }, scale_, reach);
  f.with_parts([self](double r) { return self->parts(r); })
      .with_derivative([self](double x) {
        const double r = std::abs(x);
        const double s = x < 0.0 ? -1.0 : 1.0;
        return s * self->even_.eval(r, 1) + self->odd_(r) + r * self->odd_.eval(r, 1);
      })
      .with_parity(parity_);
  if (tail) f.with_scale_growth(0.25);
  return f;
}

double LineProfile::lp_norm(double p, double kappa) const {
  if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1");
  const double beta = 2.0 * kappa;
  const double end = std::max(even_.table_end(), odd_.table_end());
  auto integrand = [&](double r) {
    const double e = even_(r);
    const double q = odd_(r);
    return std::pow(std::abs(e + r * q), p) + std::pow(std::abs(e - r * q), p);
  };
  std::vector<double> breaks;
  if (!even_.is_zero()) {
    breaks = even_.table().breaks();
  } else {
    breaks = odd_.table().breaks();
  }
  const int n = 2 * std::max(even_.is_zero() ? 0 : even_.table().points(), odd_.is_zero() ? 0 : odd_.table().points());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    QuadratureRule rule;
    if (k == 0) {
      rule = power_rule(n, breaks[1], beta);
    } else {
      rule = map_rule(cached_gauss_legendre(n), breaks[k], breaks[k + 1]);
      for (std::size_t i = 0; i < rule.size(); ++i) rule.weights[i] *= std::pow(rule.nodes[i], beta);
    }
    total += integrate(rule, integrand);
  }
  const bool tail = (even_.has_tail() && !even_.is_zero()) || (odd_.has_tail() && !odd_.is_zero());
  if (tail) {
    double worst_exp = std::numeric_limits<double>::infinity();
    if (even_.has_tail() && !even_.is_zero()) worst_exp = std::min(worst_exp, even_.tail()->exponent);
    if (odd_.has_tail() && !odd_.is_zero()) worst_exp = std::min(worst_exp, odd_.tail()->exponent - 1.0);
    if (p * worst_exp - beta <= 1.0) return std::numeric_limits<double>::infinity();
    double a = end;
    const QuadratureRule& gl = cached_gauss_legendre(n);
    for (int k = 0; k < 60; ++k) {
      const double b = 2.0 * a;
      QuadratureRule rule = map_rule(gl, a, b);
      for (std::size_t i = 0; i < rule.size(); ++i) rule.weights[i] *= std::pow(rule.nodes[i], beta);
      const double piece = integrate(rule, integrand);
      total += piece;
      a = b;
      if (std::abs(piece) < 1e-18 * total) break;
    }
  }
  return std::pow(total, 1.0 / p);
}

double LineProfile::dunkl_derivative(double x, double kappa) const {
  const double r = std::abs(x);
  const double s = x < 0.0 ? -1.0 : 1.0;
  // D(e(|x|)) = sign(x) e'(r); D(x q(|x|)) = (1 + 2 kappa) q(r) + r q'(r).
  return s * even_.eval(r, 1) + (1.0 + 2.0 * kappa) * odd_(r) + r * odd_.eval(r, 1);
}

double LineProfile::dunkl_laplacian(double x, double kappa) const {
  const double r = std::abs(x);
  const double s = x < 0.0 ? -1.0 : 1.0;
  const double e1 = even_.eval(r, 1);
  const double e2 = even_.eval(r, 2);
  const double even_part = r > 0.0 ? e2 + 2.0 * kappa * e1 / r : (1.0 + 2.0 * kappa) * e2;
  const double odd_part = r * odd_.eval(r, 2) + (2.0 + 2.0 * kappa) * odd_.eval(r, 1);
  return even_part + s * odd_part;
}

}  // namespace dunkl
