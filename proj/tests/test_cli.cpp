#include "dunkl/cli.hpp"
#include "dunkl/report.hpp"
#include "dunkl/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

using namespace dunkl;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dunkl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "dunkl_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

ComplexTable load(const fs::path& p) {
  std::ifstream is(p);
  return read_complex_csv(is);
}

double max_diff(const ComplexTable& a, const ComplexTable& b) {
  REQUIRE(a.values.size() == b.values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a.values[i] - b.values[i]));
  return d;
}

}  // namespace

TEST_CASE("transform output reads back and feeds other commands") {
  const auto t = scratch("t.csv"), tr = scratch("tr.csv"), t2 = scratch("t2.csv");
  REQUIRE(run({"transform", "--kappa", "1", "--grid-n", "128", "--cutoff", "10", "--output", t.string()}).code == 0);
  REQUIRE(run({"transform", "--kappa", "1", "--grid-n", "128", "--cutoff", "10", "--input", t.string(), "--output",
               t2.string()}).code == 0);
  // the transform of a Gaussian is a Gaussian; applying it twice to an even function returns it
  const auto a = load(t), b = load(t2);
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    CHECK(std::abs(b.values[i] - std::exp(-a.x[i] * a.x[i])) < 1e-7);
  }
  SUBCASE("translation by zero echoes the input") {
    REQUIRE(run({"translate", "--kappa", "1", "--grid-n", "128", "--cutoff", "10", "--y", "0", "--input", t.string(),
                 "--output", tr.string()}).code == 0);
    CHECK(max_diff(load(tr), a) < 1e-12);
  }
  SUBCASE("mismatched grid is a configuration error") {
    const auto r = run({"transform", "--kappa", "1", "--grid-n", "64", "--cutoff", "10", "--input", t.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("rows") != std::string::npos);
  }
}

TEST_CASE("alpha outside the admissible range exits with code 2") {
  const auto r = run({"potential", "--kappa", "0.5", "--alpha", "2.5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("alpha must lie in (0, 2 kappa + 1)") != std::string::npos);
  CHECK(run({"potential", "--kappa", "0.5", "--alpha", "0"}).code == 2);
  CHECK(run({"potential", "--kind", "bessel", "--alpha", "-1"}).code == 2);
  CHECK(run({"verify", "--suite", "potentials", "--kappa", "0.5", "--alpha", "3"}).code == 2);
}

TEST_CASE("other configuration errors exit with code 2") {
  CHECK(run({"transform", "--grid-n", "50"}).code == 2);
  CHECK(run({"transform", "--cutoff", "-1"}).code == 2);
  CHECK(run({"transform", "--kappa", "-0.5"}).code == 2);
  CHECK(run({"transform", "--kappa", "0.5", "1"}).code == 2);
  CHECK(run({"transform", "--function", "nonsense(1)"}).code == 2);
  CHECK(run({"transform", "--input", scratch("missing.csv").string()}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("riesz transform of an odd input is even") {
  const auto p = scratch("r.csv");
  REQUIRE(run({"riesz", "--kappa", "1", "--function", "odd-gaussian(1)", "--grid-n", "64", "--output", p.string()})
              .code == 0);
  const auto t = load(p);
  const std::size_t n = t.values.size();
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(t.values[i] - t.values[n - 1 - i]) < 1e-12);
    sup = std::max(sup, std::abs(t.values[i]));
  }
  CHECK(sup > 0.5);
}

TEST_CASE("bessel potential writes the kernel table next to the output") {
  const auto p = scratch("b.csv");
  fs::remove(p.string() + ".kernel.csv");
  REQUIRE(run({"potential", "--kind", "bessel", "--alpha", "0.5", "--kappa", "1", "--grid-n", "64", "--output",
               p.string()}).code == 0);
  std::ifstream k(p.string() + ".kernel.csv");
  REQUIRE(k.good());
  std::string header;
  while (std::getline(k, header) && header.rfind('#', 0) == 0) {
  }
  CHECK(header.rfind("r,", 0) == 0);
}

TEST_CASE("json output carries schema and norms") {
  const auto r = run({"potential", "--kappa", "1", "--alpha", "0.5", "--grid-n", "64", "--format", "json", "--p", "1.5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "potential");
  CHECK(j["x"].size() == 64);
  CHECK(j["norms"]["q"].get<double>() == doctest::Approx(1.0 / (1.0 / 1.5 - 0.5 / 3.0)));
  CHECK(j["norms"]["output_lq"].get<double>() > 0.0);
}

TEST_CASE("config file supplies defaults and flags override them") {
  const auto cfg = scratch("cfg.json");
  std::ofstream(cfg) << R"j({"kappa": 0.5, "grid_n": 64, "cutoff": 8, "function": "odd-gaussian(1)"})j";
  JobConfig c;
  apply_config_file(c, cfg.string());
  CHECK(c.kappa == std::vector<double>{0.5});
  CHECK(c.grid_n == 64);
  CHECK(c.function == "odd-gaussian(1)");
  std::ofstream(scratch("bad.json")) << R"({"grid_n": "many"})";
  CHECK_THROWS_AS(apply_config_file(c, scratch("bad.json").string()), ConfigError);
  std::ofstream(scratch("unknown.json")) << R"({"colour": 1})";
  CHECK_THROWS_AS(apply_config_file(c, scratch("unknown.json").string()), ConfigError);

  setenv("DUNKL_CONFIG", cfg.string().c_str(), 1);
  const auto r = run({"riesz", "--format", "json", "--kappa", "2"});
  unsetenv("DUNKL_CONFIG");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["kappa"] == 2.0);
  CHECK(j["grid"]["n"] == 64);
  CHECK(j["function"] == "odd-gaussian(1)");
}

TEST_CASE("verify prints one line per check and exits 0 when all pass") {
  const auto rep = scratch("report.json");
  const auto r = run({"verify", "--suite", "translation", "--kappa", "1", "--output", rep.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  std::ifstream is(rep);
  const auto j = nlohmann::json::parse(is);
  CHECK(j["total"] == 6);
  CHECK(j["reports"].size() == 6);
}

TEST_CASE("csv output to a file carries a json metadata sidecar") {
  const auto p = scratch("m.csv");
  REQUIRE(run({"convolve", "--kappa", "0.5", "--grid-n", "64", "--with", "gaussian(2)", "--output", p.string()}).code ==
          0);
  std::ifstream is(p.string() + ".json");
  REQUIRE(is.good());
  const auto j = nlohmann::ordered_json::parse(is);
  CHECK(j["command"] == "convolve");
  CHECK(j["parameters"]["with"] == "gaussian(2)");
  CHECK(!j.contains("x"));
}

TEST_CASE("kappa = 0 transform of a gaussian has the classical values") {
  const auto r = run({"transform", "--kappa", "0", "--grid-n", "128", "--cutoff", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  // unitary Fourier transform: e^{-x^2} -> e^{-xi^2/4} / sqrt(2)
  double err = 0.0;
  for (std::size_t i = 0; i < j["x"].size(); ++i) {
    const double xi = j["x"][i];
    err = std::max(err, std::abs(j["re"][i].get<double>() - std::exp(-xi * xi / 4) / std::sqrt(2.0)));
    err = std::max(err, std::abs(j["im"][i].get<double>()));
  }
  CHECK(err < 1e-9);
}

TEST_CASE("identical configurations give byte-identical output") {
  const auto a = run({"verify", "--suite", "translation", "--kappa", "0.5"});
  const auto b = run({"verify", "--suite", "translation", "--kappa", "0.5"});
  CHECK(a.out == b.out);
  const auto p1 = scratch("d1.json"), p2 = scratch("d2.json");
  run({"verify", "--suite", "transform", "--kappa", "1", "--output", p1.string()});
  run({"verify", "--suite", "transform", "--kappa", "1", "--output", p2.string()});
  std::ifstream s1(p1), s2(p2);
  const std::string c1((std::istreambuf_iterator<char>(s1)), {}), c2((std::istreambuf_iterator<char>(s2)), {});
  CHECK(!c1.empty());
  CHECK(c1 == c2);
  CHECK(run({"riesz", "--grid-n", "64"}).out == run({"riesz", "--grid-n", "64"}).out);
}

TEST_CASE("riesz suite at kappa = 0.5 includes the radial reduction") {
  const auto r = run({"verify", "--suite", "riesz", "--kappa", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("radial_reduction") != std::string::npos);
}
