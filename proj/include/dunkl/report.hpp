#pragma once

// Check reports and the file formats shared by the checks and the CLI:
// JSON with a schema version and 17-digit floats, CSV with a header row and
// '#' comment lines.

#include "dunkl/specfun.hpp"

#include <json.hpp>

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum class ErrorMode { absolute, relative };

struct OperatorReport {
  std::string name;
  std::string suite;
  Json inputs = Json::object();
  std::vector<double> computed;
  std::vector<double> reference;
  std::string provenance;
  double abs_error = 0.0;
  double rel_error = 0.0;
  ErrorMode mode = ErrorMode::absolute;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string note;
  double runtime_s = 0.0;

  double error() const { return mode == ErrorMode::absolute ? abs_error : rel_error; }
  /// Sets pass from error() <= tolerance (skipped reports pass with zero error).
  void finalize();
};

/// abs_error = max |computed - reference|, rel_error = abs_error / scale where
/// scale defaults to max |reference| (or 1 when the reference vanishes).
OperatorReport compare(std::string name, std::vector<double> computed, std::vector<double> reference, double tolerance,
                       ErrorMode mode, std::string provenance, double scale = 0.0);

/// Report whose error is a caller-computed quantity (slopes, ratios, defects).
OperatorReport scalar_report(std::string name, double error, double tolerance, ErrorMode mode, std::string provenance);

OperatorReport skipped_report(std::string name, std::string reason);

Json to_json(const OperatorReport& r, bool with_runtime = false);
Json reports_to_json(const std::vector<OperatorReport>& reports, bool with_runtime = false);

/// Deterministic serialization: object keys in insertion order, doubles as %.17g.
void write_json(std::ostream& os, const Json& j, int indent = 2);
std::string format_double(double v);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct ComplexTable {
  std::vector<double> x;
  std::vector<cplx> values;
  std::vector<std::string> comments;
};

/// Columns x,re,im.
void write_complex_csv(std::ostream& os, const ComplexTable& table);
ComplexTable read_complex_csv(std::istream& is);
/// Columns r,<value_name>.
void write_radial_csv(std::ostream& os, const std::vector<double>& r, const std::vector<double>& values,
                      const std::string& value_name = "value", const std::vector<std::string>& comments = {});

}  // namespace dunkl
