#include "dunkl/verify.hpp"

#include "dunkl/checks.hpp"
#include "dunkl/convolution.hpp"
#include "dunkl/potentials.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/translation.hpp"

#include <cstdio>

namespace dunkl {

namespace {

using Reports = std::vector<OperatorReport>;

std::vector<double> kappas_or(const VerifyConfig& cfg, std::vector<double> defaults) {
  if (!cfg.kappas) return defaults;
  for (double k : *cfg.kappas) {
    if (!(k >= 0.0)) throw ConfigError("kappa must be nonnegative");
  }
  return *cfg.kappas;
}

OperatorReport failed_report(const std::exception& e) {
  OperatorReport r;
  r.name = "exception";
  r.note = e.what();
  r.abs_error = r.rel_error = 1.0;
  r.pass = false;
  return r;
}

// A check that throws becomes a failed report; the suite carries on.
template <class Check>
void add(Reports& out, Check&& check, const char* suite) {
  OperatorReport r;
  try {
    r = check();
  } catch (const std::exception& e) {
    r = failed_report(e);
  }
  r.suite = suite;
  out.push_back(std::move(r));
}

Reports transform_suite(const VerifyConfig& cfg) {
  if (cfg.grid_n < 32 || cfg.grid_n % 32 != 0) throw ConfigError("grid-n must be a positive multiple of 32");
  if (!(cfg.cutoff > 0.0)) throw ConfigError("cutoff must be positive");
  Reports out;
  const auto fam = schwartz_family();
  for (double k : kappas_or(cfg, {0.0, 0.25, 0.5, 1.0, 2.5})) {
    add(out, [&] { return plancherel_inversion_check(fam, k, cfg.grid_n, cfg.cutoff); }, "transform");
    for (int n : {0, 1}) add(out, [&] { return eigenfunction_check(n, k, cfg.grid_n, cfg.cutoff); }, "transform");
  }
  return out;
}

Reports translation_suite(const VerifyConfig& cfg) {
  Reports out;
  for (double k : kappas_or(cfg, {0.5, 1.0, 2.5})) {
    add(out, [&] { return translation_routes_check(families::gaussian(1.0), k, 0.7); }, "translation");
    add(out, [&] { return translation_routes_check(families::shifted_gaussian(0.5, 1.0), k, -1.1); }, "translation");
    add(out, [&] { return translation_routes_check(families::odd_gaussian(1.0), k, 1.3); }, "translation");
    add(out, [&] { return gaussian_translate_check(k, 1.3); }, "translation");
    add(out, [&] { return support_check(families::bump(1.0), 1.0, k, 0.8); }, "translation");
    add(out, [&] {
      return translation_duality_check(families::shifted_gaussian(0.4, 1.2), families::odd_gaussian(0.8), k, 0.9);
    }, "translation");
  }
  return out;
}

Reports convolution_suite(const VerifyConfig& cfg) {
  Reports out;
  const std::vector<double> eps{0.2, 0.1, 0.05, 0.025, 0.0125};
  const auto fam = boundedness_family();
  for (double k : kappas_or(cfg, {0.0, 0.5, 1.0})) {
    add(out, [&] {
      return convolution_theorem_check(families::gaussian(1.0), families::shifted_gaussian(0.5, 1.4), k);
    }, "convolution");
    add(out, [&] {
      return convolution_theorem_check(families::odd_gaussian(1.0), families::modulated_gaussian(1.5, 0.8), k);
    }, "convolution");
    for (double p : {1.0, 2.0, 4.0}) {
      add(out, [&] { return young_check(families::shifted_gaussian(0.7, 1.0), families::gaussian(2.0), k, p); },
          "convolution");
    }
    add(out, [&] { return approximate_identity_check(families::bump(1.0), families::gaussian(1.0), k, eps); }, "convolution");
    add(out, [&] { return domination_check(families::bump(1.0), families::gaussian(1.0), k, eps); }, "convolution");
    NormRatioSpec spec;
    spec.op = NormedOperator::maximal;
    spec.kappa = k;
    spec.p = 2.0;
    add(out, [&] { return norm_ratio_check(spec, fam); }, "convolution");
  }
  return out;
}

Reports potentials_suite(const VerifyConfig& cfg) {
  const auto kappas = kappas_or(cfg, {0.5, 1.0});
  std::vector<double> alphas{0.3, 0.7};
  if (cfg.alpha) alphas = {*cfg.alpha};
  for (double k : kappas) {
    for (double a : alphas) {
      if (!(a > 0.0 && a < 2.0 * k + 1.0)) {
        throw ConfigError("alpha must lie in (0, 2 kappa + 1); got alpha = " + format_double(a) +
                          " with kappa = " + format_double(k));
      }
    }
  }
  Reports out;
  const char* s = "potentials";
  const std::vector<double> scales{0.125, 0.5, 2.0, 8.0};
  for (double k : kappas) {
    for (double a : alphas) {
      for (int n : {0, 1}) {
        add(out, [&] { return bilinear_identity_check(n, a, n == 0 ? families::gaussian(1.0) : families::odd_gaussian(1.0), k); }, s);
      }
      add(out, [&] { return riesz_multiplier_check(families::shifted_gaussian(0.4, 1.0), families::hermite_gaussian(2, 1.2), k, a); }, s);
      add(out, [&] { return riesz_semigroup_check(families::gaussian(1.0), k, a, a); }, s);
      if (1.0 / 1.5 > a / (2.0 * k + 1.0)) add(out, [&] { return scaling_exponent_check(a, 1.5, k, scales); }, s);
    }
    add(out, [&] { return laplacian_potential_identity_check(families::gaussian(1.0), k, 2.5); }, s);
    for (double a : alphas) {
      const BesselKernel G(k, a);
      add(out, [&] { return bessel_transform_check(G); }, s);
      add(out, [&] { return bessel_mass_check(G); }, s);
      add(out, [&] { return bessel_positivity_check(G); }, s);
      // the singular term dominates only below r ~ 1e-6 when 2k + 1 - a < 1
      add(out, [&] { return 2.0 * k + 1.0 - a < 1.0 ? bessel_slope_check(G, 0.02, 1e-7, 1e-6) : bessel_slope_check(G); }, s);
      add(out, [&] { return bessel_decay_check(G); }, s);
      add(out, [&] { return bessel_semigroup_check(families::shifted_gaussian(0.3, 1.0), k, a, 0.9); }, s);
      add(out, [&] { return bessel_multiplier_check(families::gaussian(1.0), k, a); }, s);
    }
  }
  const double k = kappas.back();
  const auto fam = boundedness_family();
  NormRatioSpec spec;
  spec.kappa = k;
  spec.alpha = alphas.back();
  spec.p = 1.5;
  spec.op = NormedOperator::riesz_potential;
  if (1.0 / spec.p > spec.alpha / (2.0 * k + 1.0)) add(out, [&] { return norm_ratio_check(spec, fam); }, s);
  spec.op = NormedOperator::bessel_potential;
  spec.p = 2.0;
  add(out, [&] { return norm_ratio_check(spec, fam); }, s);
  return out;
}

Reports riesz_suite(const VerifyConfig& cfg) {
  const char* s = "riesz";
  const auto kappas = kappas_or(cfg, {0.5, 1.0, 2.5});
  Reports out;
  const std::vector<Function1D> even{families::gaussian(1.0), families::gaussian(0.7), families::hermite_gaussian(2, 1.0)};
  const std::vector<Function1D> odd{families::odd_gaussian(1.0), families::monomial_gaussian(3, 1.0)};
  for (double k : kappas) {
    for (const auto& f : {families::gaussian(1.0), families::odd_gaussian(1.0), families::hermite_gaussian(2, 1.0)}) {
      add(out, [&] { return riesz_transform_multiplier_check(f, k); }, s);
    }
    for (const auto& f : {families::gaussian(1.0), families::odd_gaussian(1.0)}) {
      add(out, [&] { return riesz_square_check(f, k); }, s);
      add(out, [&] { return riesz_parity_check(f, k); }, s);
    }
    add(out, [&] { return odd_decomposition_check(families::odd_gaussian(1.0), k); }, s);
    add(out, [&] { return general_multiplier_check(1, families::shifted_gaussian(0.4, 1.0), k); }, s);
    add(out, [&] { return ladder_check(families::gaussian(1.0), k, 0.7); }, s);
  }
  std::vector<double> radial = kappas;
  if (!cfg.kappas) radial = {0.5, 1.0, 1.5};
  for (double k : radial) {
    add(out, [&] { return radial_reduction_check(even, k); }, s);
    add(out, [&] { return k1_identification_check(odd, k); }, s);
  }
  add(out, [&] { return general_multiplier_check(0, families::gaussian(1.0), kappas.front()); }, s);
  const auto fam = boundedness_family();
  const std::vector<double> ps{2.0, 4.0};
  try {
    for (auto& r : riesz_lp_ratio_check(fam, kappas.back(), ps)) add(out, [&] { return std::move(r); }, s);
  } catch (const std::exception& e) {
    add(out, [&] { return failed_report(e); }, s);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "transform", "translation", "convolution", "potentials", "riesz"};
  return names;
}

std::vector<OperatorReport> run_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (suite == "transform") return transform_suite(cfg);
  if (suite == "translation") return translation_suite(cfg);
  if (suite == "convolution") return convolution_suite(cfg);
  if (suite == "potentials") return potentials_suite(cfg);
  if (suite == "riesz") return riesz_suite(cfg);
  if (suite == "all") {
    Reports out;
    for (std::size_t i = 1; i < suite_names().size(); ++i) {
      auto part = run_suite(suite_names()[i], cfg);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw ConfigError("unknown suite '" + suite + "'");
}

int suite_exit_code(const std::vector<OperatorReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

void print_summary(std::ostream& os, const std::vector<OperatorReport>& reports, bool timings) {
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-12s %-34s %-12s %-10s", "status", "suite", "check", "error", "tolerance");
  os << line << (timings ? "  runtime_s" : "") << '\n';
  std::size_t passed = 0, skipped = 0;
  double total = 0.0;
  for (const auto& r : reports) {
    const char* status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
    passed += r.pass ? 1 : 0;
    skipped += r.skipped ? 1 : 0;
    total += r.runtime_s;
    std::snprintf(line, sizeof line, "%-6s %-12s %-34s %-12.3e %-10.1e", status, r.suite.c_str(), r.name.c_str(),
                  r.error(), r.tolerance);
    os << line;
    if (timings) {
      std::snprintf(line, sizeof line, "  %.2f", r.runtime_s);
      os << line;
    }
    os << '\n';
  }
  os << passed << "/" << reports.size() << " passed";
  if (skipped) os << " (" << skipped << " skipped)";
  if (timings) {
    std::snprintf(line, sizeof line, ", %.1f s in checks", total);
    os << line;
  }
  os << '\n';
}

}  // namespace dunkl
