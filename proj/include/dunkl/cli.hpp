#pragma once

// Command-line front end: dunkl transform|translate|convolve|maximal|potential|riesz|verify.
// Defaults come from the JSON file named by DUNKL_CONFIG, flags override it.
// Exit codes: 0 success (all checks pass), 1 check failure, 2 configuration or I/O error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

struct JobConfig {
  std::vector<double> kappa{1.0};
  bool kappa_set = false;  // verify: replace the suites' default multiplicities
  int grid_n = 256;
  double cutoff = 12.0;
  std::string function = "gaussian(1)";
  std::string with = "gaussian(1)";  // second convolution factor
  std::string input;                 // CSV path replacing `function`
  std::optional<double> alpha;
  double y = 0.0;
  std::optional<double> p, q;
  std::string kind = "riesz";        // potential: riesz | bessel
  std::string output;                // empty: standard output (verify: no report file)
  std::string format = "csv";
  std::string suite = "all";
  bool timings = false;
};

/// Reads keys kappa, grid_n, cutoff, function, with, input, alpha, y, p, q, kind, output, format, suite, timings.
/// Throws ConfigError on unknown keys or wrong types.
void apply_config_file(JobConfig& cfg, const std::string& path);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl
