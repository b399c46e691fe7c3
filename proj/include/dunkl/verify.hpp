#pragma once

// Verification suites: named batteries of checks run with fixed parameters and
// reported as a JSON array plus a summary table.

#include "dunkl/report.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

/// Invalid user configuration (exit code 2 at the command line).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerifyConfig {
  std::optional<std::vector<double>> kappas;  // replaces each suite's default multiplicities
  std::optional<double> alpha;                // potentials: replaces the default orders
  int grid_n = 256;
  double cutoff = 12.0;
};

const std::vector<std::string>& suite_names();  // all, transform, translation, convolution, potentials, riesz

/// Throws ConfigError for unknown suites or parameters outside an operator's range.
std::vector<OperatorReport> run_suite(const std::string& suite, const VerifyConfig& cfg = {});

/// 0 when every report passes, 1 otherwise.
int suite_exit_code(const std::vector<OperatorReport>& reports);

void print_summary(std::ostream& os, const std::vector<OperatorReport>& reports, bool timings = false);

}  // namespace dunkl
