#include "dunkl/cli.hpp"

#include "dunkl/convolution.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/potentials.hpp"
#include "dunkl/profile.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/translation.hpp"
#include "dunkl/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dunkl {

namespace {

// Result of an operator run: values on the grid plus metadata.
struct Output {
  std::string command;
  GridPtr grid;
  std::vector<cplx> values;
  Json parameters = Json::object();
  Json norms = Json::object();
};

template <class T>
T get_as(const Json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const std::exception&) {
    throw ConfigError("config file: wrong type for '" + key + "'");
  }
}

void validate_common(const JobConfig& cfg, bool single_kappa) {
  if (cfg.kappa.empty()) throw ConfigError("kappa: at least one value is required");
  for (double k : cfg.kappa) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw ConfigError("kappa must be a nonnegative number");
  }
  if (single_kappa && cfg.kappa.size() != 1) throw ConfigError("rank-one operators take a single kappa");
  if (cfg.grid_n < 32 || cfg.grid_n % 32 != 0) throw ConfigError("grid-n must be a positive multiple of 32");
  if (!(cfg.cutoff > 0.0) || !std::isfinite(cfg.cutoff)) throw ConfigError("cutoff must be a positive number");
  if (cfg.p && !(*cfg.p > 1.0)) throw ConfigError("p must exceed 1");
  if (cfg.q && !(*cfg.q > 1.0)) throw ConfigError("q must exceed 1");
}

GridPtr grid_of(const JobConfig& cfg) { return make_grid(cfg.kappa.front(), cfg.grid_n, cfg.cutoff); }

SampledFunction read_input(const JobConfig& cfg, const GridPtr& grid) {
  std::ifstream is(cfg.input);
  if (!is) throw ConfigError("cannot read input file '" + cfg.input + "'");
  ComplexTable t;
  try {
    t = read_complex_csv(is);
  } catch (const std::exception& e) {
    throw ConfigError(cfg.input + ": " + e.what());
  }
  const auto& nodes = grid->nodes();
  if (t.x.size() != nodes.size()) {
    throw ConfigError("input has " + std::to_string(t.x.size()) + " rows; the grid has " +
                      std::to_string(nodes.size()) + " nodes (match --grid-n and --cutoff)");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (std::abs(t.x[i] - nodes[i]) > 1e-12 * (1.0 + std::abs(nodes[i]))) {
      throw ConfigError("input abscissae do not match the grid nodes (row " + std::to_string(i + 1) + ")");
    }
  }
  return SampledFunction::from_values(grid, std::move(t.values), detect_parity(*grid, t.values));
}

Function1D input_function(const JobConfig& cfg, const GridPtr& grid) {
  if (!cfg.input.empty()) return interpolating_function(read_input(cfg, grid), cfg.input);
  try {
    return families::parse(cfg.function);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("function: ") + e.what());
  }
}

SampledFunction input_samples(const JobConfig& cfg, const GridPtr& grid) {
  if (!cfg.input.empty()) return read_input(cfg, grid);
  return SampledFunction::sample(input_function(cfg, grid), grid);
}

std::string source_name(const JobConfig& cfg) { return cfg.input.empty() ? cfg.function : cfg.input; }

void add_lp_norms(Output& o, const JobConfig& cfg, const Function1D& f, const LineProfile& tf,
                  std::optional<double> q_line) {
  if (!cfg.p) return;
  const double k = cfg.kappa.front();
  NormLayout lf;
  lf.scale = f.length_scale();
  lf.extent = std::min(f.reach(), std::max(cfg.cutoff, 20.0 * f.length_scale()));
  const double q = q_line ? *q_line : (cfg.q ? *cfg.q : *cfg.p);
  o.norms["p"] = *cfg.p;
  o.norms["q"] = q;
  o.norms["input_lp"] = line_lp_norm([&](double x) { return f(x); }, k, *cfg.p, lf, f.parity());
  o.norms["output_lq"] = tf.lp_norm(q, k);
}

Output run_transform(const JobConfig& cfg) {
  validate_common(cfg, true);
  auto grid = grid_of(cfg);
  const auto f = input_samples(cfg, grid);
  const DunklTransform1D T(grid);
  const auto F = T.forward(f);
  Output o{"transform", grid, F.values};
  o.norms["input_l2"] = plancherel_norm(f);
  o.norms["transform_l2"] = plancherel_norm(F);
  return o;
}

Output run_translate(const JobConfig& cfg) {
  validate_common(cfg, true);
  if (!std::isfinite(cfg.y)) throw ConfigError("y must be finite");
  auto grid = grid_of(cfg);
  const Translator tr(cfg.kappa.front());
  const auto r = translate_1d(input_function(cfg, grid), grid, cfg.y, tr);
  Output o{"translate", grid, r.values};
  o.parameters["y"] = cfg.y;
  return o;
}

Output run_convolve(const JobConfig& cfg) {
  validate_common(cfg, true);
  auto grid = grid_of(cfg);
  Function1D g;
  try {
    g = families::parse(cfg.with);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("with: ") + e.what());
  }
  const Convolver conv(cfg.kappa.front());
  const auto r = conv.on_grid(input_function(cfg, grid), g, grid);
  Output o{"convolve", grid, r.values};
  o.parameters["with"] = cfg.with;
  return o;
}

Output run_maximal(const JobConfig& cfg) {
  validate_common(cfg, true);
  auto grid = grid_of(cfg);
  const Function1D f = input_function(cfg, grid);
  const double k = cfg.kappa.front();
  const auto radii = default_radii(f);
  const auto res = maximal_function(f, k, grid->nodes(), radii);
  Output o{"maximal", grid, std::vector<cplx>(res.values.begin(), res.values.end())};
  o.parameters["radii"] = radii.size();
  if (cfg.p) {
    const std::vector<double> ps{*cfg.p};
    NormLayout lf;
    lf.scale = f.length_scale();
    lf.extent = std::min(f.reach(), std::max(cfg.cutoff, 20.0 * f.length_scale()));
    o.norms["p"] = *cfg.p;
    o.norms["input_lp"] = line_lp_norm([&](double x) { return f(x); }, k, *cfg.p, lf, f.parity());
    o.norms["maximal_lp"] = maximal_lp_norms(f, k, ps, radii)[0];
  }
  return o;
}

Output run_potential(const JobConfig& cfg) {
  validate_common(cfg, true);
  if (cfg.kind != "riesz" && cfg.kind != "bessel") throw ConfigError("kind must be riesz or bessel");
  if (!cfg.alpha) throw ConfigError("potential: --alpha is required");
  const double k = cfg.kappa.front(), a = *cfg.alpha;
  auto grid = grid_of(cfg);
  Output o{"potential", grid, {}};
  o.parameters["kind"] = cfg.kind;
  o.parameters["alpha"] = a;
  if (cfg.kind == "riesz") {
    if (!(a > 0.0 && a < 2.0 * k + 1.0)) {
      throw ConfigError("alpha must lie in (0, 2 kappa + 1); got alpha = " + format_double(a) + ", kappa = " +
                        format_double(k));
    }
    std::optional<double> q_line;
    if (cfg.p) {
      const double inv_q = 1.0 / *cfg.p - a / (2.0 * k + 1.0);
      if (!(inv_q > 0.0)) throw ConfigError("p must satisfy 1/p > alpha / (2 kappa + 1)");
      q_line = 1.0 / inv_q;
      if (cfg.q && std::abs(*cfg.q - *q_line) > 1e-9 * *q_line) {
        throw ConfigError("q must satisfy 1/q = 1/p - alpha / (2 kappa + 1), i.e. q = " + format_double(*q_line));
      }
    }
    const RieszPotential I(k, a);
    const Function1D f = input_function(cfg, grid);
    o.values = I.on_grid(f, grid).values;
    if (cfg.p) add_lp_norms(o, cfg, f, I.tabulate(f), q_line);
  } else {
    if (!(a > 0.0)) throw ConfigError("alpha must be positive for the Bessel potential");
    const BesselPotential J(k, a);
    const Function1D f = input_function(cfg, grid);
    o.values = J.on_grid(f, grid).values;
    if (cfg.p) add_lp_norms(o, cfg, f, J.tabulate(f), std::nullopt);
    const std::string sidecar = (cfg.output.empty() ? std::string("bessel") : cfg.output) + ".kernel.csv";
    J.kernel().write_csv(sidecar);
    o.parameters["kernel_table"] = sidecar;
  }
  return o;
}

Output run_riesz(const JobConfig& cfg) {
  validate_common(cfg, true);
  auto grid = grid_of(cfg);
  const RieszTransform R(cfg.kappa.front());
  const Function1D f = input_function(cfg, grid);
  Output o{"riesz", grid, R.on_grid(f, grid).values};
  o.parameters["constant"] = R.constant();
  if (cfg.p) add_lp_norms(o, cfg, f, R.tabulate(f), std::nullopt);
  return o;
}

Json metadata(const Output& o, const JobConfig& cfg) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = o.command;
  j["kappa"] = cfg.kappa.front();
  j["grid"] = Json{{"n", cfg.grid_n}, {"cutoff", cfg.cutoff}};
  j["function"] = source_name(cfg);
  j["parameters"] = o.parameters;
  j["norms"] = o.norms;
  return j;
}

// JSON: metadata plus x, re, im. CSV: x,re,im with '#' metadata lines; a CSV file
// also gets the metadata as <output>.json.
void write_output(const Output& o, const JobConfig& cfg, std::ostream& out) {
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw ConfigError("cannot write output file '" + cfg.output + "'");
  }
  std::ostream& os = cfg.output.empty() ? out : file;
  Json j = metadata(o, cfg);
  if (cfg.format == "json") {
    std::vector<double> re, im;
    for (const cplx& v : o.values) {
      re.push_back(v.real());
      im.push_back(v.imag());
    }
    j["x"] = o.grid->nodes();
    j["re"] = re;
    j["im"] = im;
    write_json(os, j);
    os << '\n';
    return;
  }
  ComplexTable t{o.grid->nodes(), o.values, {}};
  t.comments.push_back("command " + o.command);
  t.comments.push_back("kappa " + format_double(cfg.kappa.front()));
  t.comments.push_back("grid n=" + std::to_string(cfg.grid_n) + " cutoff=" + format_double(cfg.cutoff));
  t.comments.push_back("function " + source_name(cfg));
  for (const auto& [key, v] : o.parameters.items()) {
    t.comments.push_back(key + " " + (v.is_string() ? v.get<std::string>() : v.dump()));
  }
  for (const auto& [key, v] : o.norms.items()) {
    t.comments.push_back("norm " + key + " " + (v.is_number_float() ? format_double(v.get<double>()) : v.dump()));
  }
  write_complex_csv(os, t);
  if (!cfg.output.empty()) {
    std::ofstream meta(cfg.output + ".json");
    if (!meta) throw ConfigError("cannot write metadata file '" + cfg.output + ".json'");
    write_json(meta, j);
    meta << '\n';
  }
}

int run_verify(const JobConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  if (cfg.kappa_set) vc.kappas = cfg.kappa;
  vc.alpha = cfg.alpha;
  vc.grid_n = cfg.grid_n;
  vc.cutoff = cfg.cutoff;
  const auto reports = run_suite(cfg.suite, vc);
  if (!cfg.output.empty()) {
    std::ofstream os(cfg.output);
    if (!os) throw ConfigError("cannot write report file '" + cfg.output + "'");
    write_json(os, reports_to_json(reports, cfg.timings));
    os << '\n';
  }
  print_summary(out, reports, cfg.timings);
  return suite_exit_code(reports);
}

}  // namespace

void apply_config_file(JobConfig& cfg, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(is);
  } catch (const std::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "kappa") {
      cfg.kappa = v.is_array() ? get_as<std::vector<double>>(v, key) : std::vector<double>{get_as<double>(v, key)};
      cfg.kappa_set = true;
    } else if (key == "grid_n") {
      cfg.grid_n = get_as<int>(v, key);
    } else if (key == "cutoff") {
      cfg.cutoff = get_as<double>(v, key);
    } else if (key == "function") {
      cfg.function = get_as<std::string>(v, key);
    } else if (key == "with") {
      cfg.with = get_as<std::string>(v, key);
    } else if (key == "input") {
      cfg.input = get_as<std::string>(v, key);
    } else if (key == "alpha") {
      cfg.alpha = get_as<double>(v, key);
    } else if (key == "y") {
      cfg.y = get_as<double>(v, key);
    } else if (key == "p") {
      cfg.p = get_as<double>(v, key);
    } else if (key == "q") {
      cfg.q = get_as<double>(v, key);
    } else if (key == "kind") {
      cfg.kind = get_as<std::string>(v, key);
    } else if (key == "output") {
      cfg.output = get_as<std::string>(v, key);
    } else if (key == "format") {
      cfg.format = get_as<std::string>(v, key);
    } else if (key == "suite") {
      cfg.suite = get_as<std::string>(v, key);
    } else if (key == "timings") {
      cfg.timings = get_as<bool>(v, key);
    } else {
      throw ConfigError("config file: unknown key '" + key + "'");
    }
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  try {
    if (const char* path = std::getenv("DUNKL_CONFIG"); path && *path) apply_config_file(cfg, path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Rank-one Dunkl harmonic analysis: transforms, translations, convolution, potentials, Riesz transforms"};
  app.require_subcommand(1);
  std::vector<double> kappa_flag;
  std::optional<double> alpha_flag, p_flag, q_flag;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--kappa", kappa_flag, "Multiplicity (verify: list replacing the suite defaults)");
    sub->add_option("--grid-n", cfg.grid_n, "Grid nodes (multiple of 32)");
    sub->add_option("--cutoff", cfg.cutoff, "Grid half-width");
    sub->add_option("--output", cfg.output, "Output path (default: standard output)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--timings", cfg.timings, "Report runtimes");
  };
  auto operator_opts = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--function", cfg.function, "Named family, e.g. gaussian(1), hermite-gaussian(2,1), bump(1)");
    sub->add_option("--input", cfg.input, "CSV with columns x,re,im on the grid nodes");
    sub->add_option("--p", p_flag, "Also report the L^p norm of the input");
    sub->add_option("--q", q_flag, "Exponent for the output norm");
  };

  auto* transform = app.add_subcommand("transform", "Dunkl transform on the grid");
  operator_opts(transform);
  auto* translate = app.add_subcommand("translate", "Generalized translation tau_y f");
  operator_opts(translate);
  translate->add_option("--y", cfg.y, "Translation parameter");
  auto* convolve = app.add_subcommand("convolve", "Dunkl convolution f * g");
  operator_opts(convolve);
  convolve->add_option("--with", cfg.with, "Second factor (named family)");
  auto* maximal = app.add_subcommand("maximal", "Maximal function");
  operator_opts(maximal);
  auto* potential = app.add_subcommand("potential", "Riesz or Bessel potential");
  operator_opts(potential);
  potential->add_option("--alpha", alpha_flag, "Order of the potential");
  potential->add_option("--kind", cfg.kind, "riesz or bessel")->check(CLI::IsMember({"riesz", "bessel"}));
  auto* riesz = app.add_subcommand("riesz", "Riesz transform");
  operator_opts(riesz);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  common(verify);
  verify->add_option("--suite", cfg.suite, "Suite")->check(CLI::IsMember(suite_names()));
  verify->add_option("--alpha", alpha_flag, "Potentials: order replacing the defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!kappa_flag.empty()) {
    cfg.kappa = kappa_flag;
    cfg.kappa_set = true;
  }
  if (alpha_flag) cfg.alpha = alpha_flag;
  if (p_flag) cfg.p = p_flag;
  if (q_flag) cfg.q = q_flag;
  if (cfg.format != "csv" && cfg.format != "json") {
    err << "error: format must be csv or json\n";
    return 2;
  }

  try {
    Stopwatch sw;
    if (verify->parsed()) return run_verify(cfg, out);
    Output o;
    if (transform->parsed()) o = run_transform(cfg);
    else if (translate->parsed()) o = run_translate(cfg);
    else if (convolve->parsed()) o = run_convolve(cfg);
    else if (maximal->parsed()) o = run_maximal(cfg);
    else if (potential->parsed()) o = run_potential(cfg);
    else o = run_riesz(cfg);
    write_output(o, cfg, out);
    if (cfg.timings) err << o.command << ": " << format_double(sw.seconds()) << " s\n";
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dunkl
