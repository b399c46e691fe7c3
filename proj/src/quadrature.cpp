#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace dunkl {

namespace {

// Recurrence coefficients of the monic Jacobi polynomials for (1-t)^a (1+t)^b.
void jacobi_recurrence(int n, double a, double b, std::vector<double>& alpha, std::vector<double>& beta) {
  alpha.assign(n, 0.0);
  beta.assign(n, 0.0);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    if (k == 0) {
      alpha[k] = (b - a) / (ab + 2.0);
    } else {
      alpha[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    if (k == 1) {
      beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else if (k > 1) {
      const double kk = k;
      beta[k] = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
}

double jacobi_mass(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

// Orthonormal polynomial values p_0..p_{n} at x; returns p_n and its derivative.
void orthonormal_eval(double x, int n, const std::vector<double>& alpha, const std::vector<double>& sbeta,
                      double p0, double& sumsq, double& pn, double& dpn) {
  double pm1 = 0.0, p = p0, dpm1 = 0.0, dp = 0.0;
  sumsq = p * p;
  for (int k = 0; k < n; ++k) {
    const double next = ((x - alpha[k]) * p - (k > 0 ? sbeta[k] * pm1 : 0.0)) / sbeta[k + 1];
    const double dnext = (p + (x - alpha[k]) * dp - (k > 0 ? sbeta[k] * dpm1 : 0.0)) / sbeta[k + 1];
    pm1 = p;
    dpm1 = dp;
    p = next;
    dp = dnext;
    if (k + 1 < n) sumsq += p * p;
  }
  pn = p;
  dpn = dp;
}

}  // namespace

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("gauss_jacobi: exponents must exceed -1");
  std::vector<double> alpha, beta;
  jacobi_recurrence(n + 1, a, b, alpha, beta);
  const double mu0 = jacobi_mass(a, b);

  QuadratureRule rule;
  rule.lo = -1.0;
  rule.hi = 1.0;
  rule.kind = (a == 0.0 && b == 0.0) ? WeightKind::unit : WeightKind::jacobi;
  rule.a = a;
  rule.b = b;
  rule.exactness = 2 * n - 1;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = alpha[0];
    rule.weights[0] = mu0;
    return rule;
  }

  Eigen::VectorXd diag(n), sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = alpha[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(beta[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigen solve failed");

  std::vector<double> sbeta(n + 1);
  for (int k = 1; k <= n; ++k) sbeta[k] = std::sqrt(beta[k]);
  const double p0 = 1.0 / std::sqrt(mu0);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    double sumsq = 0.0, pn = 0.0, dpn = 0.0;
    for (int it = 0; it < 3; ++it) {
      orthonormal_eval(x, n, alpha, sbeta, p0, sumsq, pn, dpn);
      if (dpn == 0.0) break;
      const double dx = pn / dpn;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    orthonormal_eval(x, n, alpha, sbeta, p0, sumsq, pn, dpn);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / sumsq;
  }
  std::vector<std::size_t> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return rule.nodes[l] < rule.nodes[r]; });
  QuadratureRule sorted = rule;
  for (int i = 0; i < n; ++i) {
    sorted.nodes[i] = rule.nodes[order[i]];
    sorted.weights[i] = rule.weights[order[i]];
  }
  return sorted;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  QuadratureRule rule;
  rule.kind = WeightKind::unit;
  rule.exactness = 2 * n - 1;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
  }
  return rule;
}

namespace {
std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

const QuadratureRule& cached_gauss_legendre(int n) {
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QuadratureRule>(gauss_legendre(n));
  return *slot;
}

const QuadratureRule& cached_gauss_jacobi(int n, double a, double b) {
  static std::map<std::tuple<int, double, double>, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[{n, a, b}];
  if (!slot) slot = std::make_unique<QuadratureRule>(gauss_jacobi(n, a, b));
  return *slot;
}

QuadratureRule map_rule(const QuadratureRule& ref, double lo, double hi) {
  QuadratureRule out = ref;
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double scale = half;
  if (ref.kind == WeightKind::jacobi) scale *= std::pow(half, ref.a + ref.b);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    out.nodes[i] = mid + half * ref.nodes[i];
    out.weights[i] = ref.weights[i] * scale;
  }
  out.lo = lo;
  out.hi = hi;
  return out;
}

QuadratureRule power_rule(int n, double h, double beta) {
  if (!(beta > -1.0)) throw std::domain_error("power_rule: exponent must exceed -1");
  if (!(h > 0.0)) throw std::domain_error("power_rule: interval length must be positive");
  QuadratureRule out = map_rule(cached_gauss_jacobi(n, 0.0, beta), 0.0, h);
  out.kind = WeightKind::radial_power;
  out.a = beta;
  out.b = 0.0;
  return out;
}

QuadratureRule radial_rule(const RadialGrid& grid, double beta) {
  if (!(beta > -1.0)) throw std::domain_error("radial_rule: singular exponent must exceed -1 (non-integrable)");
  if (!(grid.cutoff > 0.0) || grid.levels < 0 || grid.points_per_panel < 1 || !(grid.ratio > 0.0 && grid.ratio < 1.0)) {
    throw std::invalid_argument("radial_rule: invalid grid");
  }
  std::vector<double> breaks;
  double r = grid.cutoff;
  breaks.push_back(r);
  for (int l = 0; l < grid.levels; ++l) {
    r *= grid.ratio;
    breaks.push_back(r);
  }
  std::reverse(breaks.begin(), breaks.end());
  QuadratureRule out;
  out.lo = 0.0;
  out.hi = grid.cutoff;
  out.kind = WeightKind::radial_power;
  out.a = beta;
  const QuadratureRule first = power_rule(grid.points_per_panel, breaks.front(), beta);
  out.nodes = first.nodes;
  out.weights = first.weights;
  const QuadratureRule& gl = cached_gauss_legendre(grid.points_per_panel);
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const QuadratureRule panel = map_rule(gl, breaks[p], breaks[p + 1]);
    for (std::size_t i = 0; i < panel.size(); ++i) {
      out.nodes.push_back(panel.nodes[i]);
      out.weights.push_back(panel.weights[i] * std::pow(panel.nodes[i], beta));
    }
  }
  return out;
}

QuadratureRule composite_legendre(std::span<const double> breaks, int points_per_panel) {
  if (breaks.size() < 2) throw std::invalid_argument("composite_legendre: need at least two breakpoints");
  QuadratureRule out;
  out.lo = breaks.front();
  out.hi = breaks.back();
  out.kind = WeightKind::unit;
  out.exactness = 2 * points_per_panel - 1;
  const QuadratureRule& gl = cached_gauss_legendre(points_per_panel);
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    if (!(breaks[p + 1] > breaks[p])) throw std::invalid_argument("composite_legendre: breakpoints must increase");
    const QuadratureRule panel = map_rule(gl, breaks[p], breaks[p + 1]);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return out;
}

std::complex<double> integrate(const QuadratureRule& rule, std::span<const std::complex<double>> values) {
  if (values.size() != rule.size()) throw std::invalid_argument("integrate: length mismatch");
  std::complex<double> s{0.0, 0.0};
  for (std::size_t i = 0; i < values.size(); ++i) s += rule.weights[i] * values[i];
  return s;
}

double integrate(const QuadratureRule& rule, std::span<const double> values) {
  if (values.size() != rule.size()) throw std::invalid_argument("integrate: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += rule.weights[i] * values[i];
  return s;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

namespace {

std::vector<double> barycentric_weights(std::span<const double> x) {
  std::vector<double> w(x.size(), 1.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (k != j) w[j] /= (x[j] - x[k]);
    }
  }
  // Rescale to avoid overflow for wide panels; interpolation is invariant.
  double m = 0.0;
  for (double v : w) m = std::max(m, std::abs(v));
  for (double& v : w) v /= m;
  return w;
}

}  // namespace

LineGrid::LineGrid(double kappa, int n, double cutoff, int points_per_panel)
    : kappa_(kappa), cutoff_(cutoff), ppp_(points_per_panel) {
  if (!(kappa >= 0.0)) throw std::domain_error("LineGrid: kappa must be nonnegative");
  if (!(cutoff > 0.0)) throw std::invalid_argument("LineGrid: cutoff must be positive");
  if (points_per_panel < 2) throw std::invalid_argument("LineGrid: need at least two points per panel");
  if (n < 2 * points_per_panel || n % (2 * points_per_panel) != 0) {
    throw std::invalid_argument("LineGrid: n must be a positive multiple of 2*points_per_panel (" +
                                std::to_string(2 * points_per_panel) + ")");
  }
  half_ = static_cast<std::size_t>(n / 2);
  const std::size_t npan = half_ / static_cast<std::size_t>(points_per_panel);
  const double width = cutoff / static_cast<double>(npan);
  const double beta = 2.0 * kappa;

  std::vector<double> pos_nodes, pos_w, pos_plain;
  std::vector<double> pos_breaks{0.0};
  const QuadratureRule& gl = cached_gauss_legendre(points_per_panel);
  for (std::size_t p = 0; p < npan; ++p) {
    const double lo = width * static_cast<double>(p);
    const double hi = width * static_cast<double>(p + 1);
    pos_breaks.push_back(hi);
    if (p == 0 && kappa > 0.0) {
      const QuadratureRule pr = power_rule(points_per_panel, hi, beta);
      for (std::size_t i = 0; i < pr.size(); ++i) {
        pos_nodes.push_back(pr.nodes[i]);
        pos_w.push_back(pr.weights[i]);
        pos_plain.push_back(pr.weights[i] / std::pow(pr.nodes[i], beta));
      }
    } else {
      const QuadratureRule pr = map_rule(gl, lo, hi);
      for (std::size_t i = 0; i < pr.size(); ++i) {
        pos_nodes.push_back(pr.nodes[i]);
        pos_w.push_back(pr.weights[i] * (kappa > 0.0 ? std::pow(pr.nodes[i], beta) : 1.0));
        pos_plain.push_back(pr.weights[i]);
      }
    }
  }
  nodes_.resize(2 * half_);
  weights_.resize(2 * half_);
  plain_weights_.resize(2 * half_);
  for (std::size_t k = 0; k < half_; ++k) {
    nodes_[half_ + k] = pos_nodes[k];
    nodes_[half_ - 1 - k] = -pos_nodes[k];
    weights_[half_ + k] = weights_[half_ - 1 - k] = pos_w[k];
    plain_weights_[half_ + k] = plain_weights_[half_ - 1 - k] = pos_plain[k];
  }
  for (std::size_t p = npan; p > 0; --p) panel_breaks_.push_back(-pos_breaks[p]);
  panel_breaks_.insert(panel_breaks_.end(), pos_breaks.begin(), pos_breaks.end());

  const std::size_t m = static_cast<std::size_t>(points_per_panel);
  for (std::size_t p = 0; p + 1 < panel_breaks_.size(); ++p) {
    std::span<const double> x(nodes_.data() + p * m, m);
    bary_.push_back(barycentric_weights(x));
    const auto& w = bary_.back();
    std::vector<double> d(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      double diag = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        d[i * m + j] = (w[j] / w[i]) / (x[i] - x[j]);
        diag -= d[i * m + j];
      }
      d[i * m + i] = diag;
    }
    dmat_.push_back(std::move(d));
  }
}

QuadratureRule LineGrid::rule() const {
  QuadratureRule r;
  r.nodes = nodes_;
  r.weights = weights_;
  r.lo = -cutoff_;
  r.hi = cutoff_;
  r.kind = WeightKind::mapped_line;
  r.a = 2.0 * kappa_;
  return r;
}

std::size_t LineGrid::locate_panel(double x) const {
  const std::size_t np = panel_breaks_.size() - 1;
  if (x <= panel_breaks_.front()) return 0;
  if (x >= panel_breaks_.back()) return np - 1;
  auto it = std::upper_bound(panel_breaks_.begin(), panel_breaks_.end(), x);
  std::size_t p = static_cast<std::size_t>(it - panel_breaks_.begin()) - 1;
  return std::min(p, np - 1);
}

namespace {
template <typename T>
T bary_eval(std::span<const double> xs, const std::vector<double>& w, std::span<const T> f, double x) {
  T num{};
  double den = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double diff = x - xs[j];
    if (diff == 0.0) return f[j];
    const double c = w[j] / diff;
    num += c * f[j];
    den += c;
  }
  return num / den;
}
}  // namespace

double LineGrid::interpolate(std::span<const double> values, double x) const {
  if (values.size() != size()) throw std::invalid_argument("interpolate: length mismatch");
  if (std::abs(x) > cutoff_) return 0.0;
  const std::size_t p = locate_panel(x);
  const std::size_t m = static_cast<std::size_t>(ppp_);
  return bary_eval<double>(std::span<const double>(nodes_.data() + p * m, m), bary_[p], values.subspan(p * m, m), x);
}

std::complex<double> LineGrid::interpolate(std::span<const std::complex<double>> values, double x) const {
  if (values.size() != size()) throw std::invalid_argument("interpolate: length mismatch");
  if (std::abs(x) > cutoff_) return {0.0, 0.0};
  const std::size_t p = locate_panel(x);
  const std::size_t m = static_cast<std::size_t>(ppp_);
  return bary_eval<std::complex<double>>(std::span<const double>(nodes_.data() + p * m, m), bary_[p],
                                         values.subspan(p * m, m), x);
}

std::vector<std::complex<double>> LineGrid::differentiate(std::span<const std::complex<double>> values) const {
  if (values.size() != size()) throw std::invalid_argument("differentiate: length mismatch");
  const std::size_t m = static_cast<std::size_t>(ppp_);
  std::vector<std::complex<double>> out(size());
  for (std::size_t p = 0; p < dmat_.size(); ++p) {
    for (std::size_t i = 0; i < m; ++i) {
      std::complex<double> s{0.0, 0.0};
      for (std::size_t j = 0; j < m; ++j) s += dmat_[p][i * m + j] * values[p * m + j];
      out[p * m + i] = s;
    }
  }
  return out;
}

std::vector<double> LineGrid::differentiate(std::span<const double> values) const {
  std::vector<std::complex<double>> c(values.begin(), values.end());
  auto d = differentiate(std::span<const std::complex<double>>(c));
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i].real();
  return out;
}

bool LineGrid::same_layout(const LineGrid& other) const {
  return kappa_ == other.kappa_ && cutoff_ == other.cutoff_ && ppp_ == other.ppp_ && half_ == other.half_;
}

}  // namespace dunkl
