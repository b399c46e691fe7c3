#include "dunkl/functions.hpp"

#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace dunkl {

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "none";
  }
}

Function1D::Function1D(std::string name, Eval f, double length_scale, double reach)
    : name_(std::move(name)), f_(std::move(f)), scale_(length_scale), reach_(reach) {
  if (!(length_scale > 0.0)) throw std::invalid_argument("Function1D: length scale must be positive");
  if (!(reach > 0.0)) throw std::invalid_argument("Function1D: reach must be positive");
}

Function1D& Function1D::with_parts(PartsFn p) {
  parts_ = std::move(p);
  return *this;
}

Function1D& Function1D::with_derivative(Eval d) {
  df_ = std::move(d);
  return *this;
}

Function1D& Function1D::with_breakpoints(std::vector<double> radii) {
  breaks_ = std::move(radii);
  return *this;
}

Function1D& Function1D::with_parity(Parity p) {
  parity_ = p;
  return *this;
}

Function1D& Function1D::with_reach(double reach) {
  if (!(reach > 0.0)) throw std::invalid_argument("Function1D: reach must be positive");
  reach_ = reach;
  return *this;
}

Function1D& Function1D::with_scale_growth(double growth) {
  growth_ = growth;
  return *this;
}

RadialParts Function1D::parts(double r) const {
  if (parts_) return parts_(r);
  if (r == 0.0) return {f_(0.0), 0.0};
  const double fp = f_(r);
  const double fm = f_(-r);
  return {0.5 * (fp + fm), 0.5 * (fp - fm) / r};
}

double Function1D::derivative(double x) const {
  if (df_) return df_(x);
  const double h = 1e-5 * scale_;
  return (f_(x + h) - f_(x - h)) / (2.0 * h);
}

Function1D Function1D::reflected() const {
  Function1D out = *this;
  auto f = f_;
  out.f_ = [f](double x) { return f(-x); };
  out.name_ = name_ + "(-x)";
  if (df_) {
    auto d = df_;
    out.df_ = [d](double x) { return -d(-x); };
  }
  if (parts_) {
    auto p = parts_;
    out.parts_ = [p](double r) {
      RadialParts q = p(r);
      q.odd_over_r = -q.odd_over_r;
      return q;
    };
  }
  return out;
}

Function1D Function1D::scaled(double c) const {
  Function1D out = *this;
  auto f = f_;
  out.f_ = [f, c](double x) { return c * f(x); };
  if (df_) {
    auto d = df_;
    out.df_ = [d, c](double x) { return c * d(x); };
  }
  if (parts_) {
    auto p = parts_;
    out.parts_ = [p, c](double r) {
      RadialParts q = p(r);
      return RadialParts{c * q.even, c * q.odd_over_r};
    };
  }
  return out;
}

namespace families {

namespace {
std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Radius where e^{-s^2 r^2} drops below e^{-45}.
double gaussian_reach(double s) { return std::sqrt(45.0) / s; }

double hermite(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}
}  // namespace

Function1D gaussian(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("gaussian: scale must be positive");
  Function1D f("gaussian(" + fmt(s) + ")", [s](double x) { return std::exp(-s * s * x * x); }, 1.0 / s,
               gaussian_reach(s));
  f.with_parts([s](double r) { return RadialParts{std::exp(-s * s * r * r), 0.0}; })
      .with_derivative([s](double x) { return -2.0 * s * s * x * std::exp(-s * s * x * x); })
      .with_parity(Parity::even);
  return f;
}

Function1D hermite_gaussian(int n, double s) {
  if (n < 0) throw std::invalid_argument("hermite-gaussian: degree must be nonnegative");
  if (!(s > 0.0)) throw std::invalid_argument("hermite-gaussian: scale must be positive");
  const double reach = (std::sqrt(90.0) + std::sqrt(2.0 * n + 1.0) + 2.0 * std::log(2.0 + n)) / s;
  Function1D f("hermite-gaussian(" + std::to_string(n) + "," + fmt(s) + ")",
               [n, s](double x) { return hermite(n, s * x) * std::exp(-0.5 * s * s * x * x); },
               1.0 / (s * std::sqrt(1.0 + 0.5 * n)), reach);
  f.with_parity(n % 2 == 0 ? Parity::even : Parity::odd);
  f.with_derivative([n, s](double x) {
    const double u = s * x;
    const double hn = hermite(n, u);
    const double dh = n > 0 ? 2.0 * n * hermite(n - 1, u) : 0.0;
    return s * (dh - u * hn) * std::exp(-0.5 * u * u);
  });
  f.with_parts([n, s](double r) {
    const double g = std::exp(-0.5 * s * s * r * r);
    if (n % 2 == 0) return RadialParts{hermite(n, s * r) * g, 0.0};
    if (r == 0.0) return RadialParts{0.0, 2.0 * n * hermite(n - 1, 0.0) * s * g};
    return RadialParts{0.0, hermite(n, s * r) / r * g};
  });
  return f;
}

Function1D bump(double B) {
  if (!(B > 0.0)) throw std::invalid_argument("bump: radius must be positive");
  auto val = [B](double x) {
    const double u = x / B;
    const double d = 1.0 - u * u;
    return d > 0.0 ? std::exp(-1.0 / d) : 0.0;
  };
  Function1D f("bump(" + fmt(B) + ")", val, B / 8.0, B);
  f.with_parts([val](double r) { return RadialParts{val(r), 0.0}; })
      .with_derivative([B](double x) {
        const double u = x / B;
        const double d = 1.0 - u * u;
        if (d <= 0.0) return 0.0;
        return -2.0 * u / (B * d * d) * std::exp(-1.0 / d);
      })
      .with_breakpoints({B})
      .with_parity(Parity::even);
  return f;
}

Function1D indicator(double B) {
  if (!(B > 0.0)) throw std::invalid_argument("indicator: radius must be positive");
  auto val = [B](double x) { return std::abs(x) <= B ? 1.0 : 0.0; };
  Function1D f("indicator(" + fmt(B) + ")", val, B, B);
  f.with_parts([val](double r) { return RadialParts{val(r), 0.0}; })
      .with_derivative([](double) { return 0.0; })
      .with_breakpoints({B})
      .with_parity(Parity::even);
  return f;
}

Function1D odd_gaussian(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("odd-gaussian: scale must be positive");
  Function1D f("odd-gaussian(" + fmt(s) + ")", [s](double x) { return x * std::exp(-s * s * x * x); }, 1.0 / s,
               gaussian_reach(s) + 1.0 / s);
  f.with_parts([s](double r) { return RadialParts{0.0, std::exp(-s * s * r * r)}; })
      .with_derivative([s](double x) { return (1.0 - 2.0 * s * s * x * x) * std::exp(-s * s * x * x); })
      .with_parity(Parity::odd);
  return f;
}

Function1D shifted_gaussian(double c, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("shifted-gaussian: scale must be positive");
  Function1D f("shifted-gaussian(" + fmt(c) + "," + fmt(s) + ")",
               [c, s](double x) { return std::exp(-s * s * (x - c) * (x - c)); }, 1.0 / s,
               gaussian_reach(s) + std::abs(c));
  f.with_parts([c, s](double r) {
     const double fp = std::exp(-s * s * (r - c) * (r - c));
     const double fm = std::exp(-s * s * (r + c) * (r + c));
     const double z = 2.0 * s * s * c * r;
     if (std::abs(z) < 1e-2) {
       const double g = std::exp(-s * s * (r * r + c * c));
       const double sh_over_r = r == 0.0 ? 2.0 * s * s * c : std::sinh(z) / r;
       return RadialParts{0.5 * (fp + fm), g * sh_over_r};
     }
     return RadialParts{0.5 * (fp + fm), 0.5 * (fp - fm) / r};
   }).with_derivative([c, s](double x) { return -2.0 * s * s * (x - c) * std::exp(-s * s * (x - c) * (x - c)); });
  return f;
}

Function1D monomial_gaussian(int n, double s) {
  if (n < 0) throw std::invalid_argument("monomial-gaussian: degree must be nonnegative");
  if (!(s > 0.0)) throw std::invalid_argument("monomial-gaussian: scale must be positive");
  const double reach = (std::sqrt(45.0 + n * std::log(2.0 + n)) + std::sqrt(0.5 * n)) / s;
  Function1D f("monomial-gaussian(" + std::to_string(n) + "," + fmt(s) + ")",
               [n, s](double x) { return std::pow(x, n) * std::exp(-s * s * x * x); },
               1.0 / (s * std::sqrt(1.0 + 0.5 * n)), reach);
  f.with_parity(n % 2 == 0 ? Parity::even : Parity::odd)
      .with_parts([n, s](double r) {
        const double g = std::exp(-s * s * r * r);
        if (n % 2 == 0) return RadialParts{std::pow(r, n) * g, 0.0};
        return RadialParts{0.0, std::pow(r, n - 1) * g};
      })
      .with_derivative([n, s](double x) {
        const double g = std::exp(-s * s * x * x);
        const double a = n > 0 ? n * std::pow(x, n - 1) : 0.0;
        return (a - 2.0 * s * s * std::pow(x, n + 1)) * g;
      });
  return f;
}

Function1D modulated_gaussian(double w, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("modulated-gaussian: scale must be positive");
  const double scale = 1.0 / std::sqrt(s * s + 0.25 * w * w);
  Function1D f("modulated-gaussian(" + fmt(w) + "," + fmt(s) + ")",
               [w, s](double x) { return std::cos(w * x) * std::exp(-s * s * x * x); }, scale, gaussian_reach(s));
  f.with_parity(Parity::even)
      .with_parts([w, s](double r) { return RadialParts{std::cos(w * r) * std::exp(-s * s * r * r), 0.0}; })
      .with_derivative([w, s](double x) {
        return (-w * std::sin(w * x) - 2.0 * s * s * x * std::cos(w * x)) * std::exp(-s * s * x * x);
      });
  return f;
}

Function1D parse(const std::string& spec) {
  static const std::regex re(R"(^\s*([a-z\-]+)\s*(?:\(\s*([^)]*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw std::invalid_argument("cannot parse function spec '" + spec + "'");
  const std::string name = m[1];
  std::vector<double> args;
  if (m[2].matched) {
    std::stringstream ss(m[2].str());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        args.push_back(std::stod(tok, &used));
        if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric argument '" + tok + "' in '" + spec + "'");
      }
    }
  }
  auto arg = [&](std::size_t i, double dflt) { return i < args.size() ? args[i] : dflt; };
  auto need_int = [&](double v) {
    if (v != std::floor(v)) throw std::invalid_argument("degree must be an integer in '" + spec + "'");
    return static_cast<int>(v);
  };
  if (name == "gaussian") return gaussian(arg(0, 1.0));
  if (name == "hermite-gaussian") return hermite_gaussian(need_int(arg(0, 0.0)), arg(1, 1.0));
  if (name == "bump") return bump(arg(0, 1.0));
  if (name == "indicator") return indicator(arg(0, 1.0));
  if (name == "odd-gaussian") return odd_gaussian(arg(0, 1.0));
  if (name == "shifted-gaussian") return shifted_gaussian(arg(0, 0.5), arg(1, 1.0));
  if (name == "monomial-gaussian") return monomial_gaussian(need_int(arg(0, 1.0)), arg(1, 1.0));
  if (name == "modulated-gaussian") return modulated_gaussian(arg(0, 1.0), arg(1, 1.0));
  throw std::invalid_argument("unknown function family '" + name + "'");
}

}  // namespace families

}  // namespace dunkl
