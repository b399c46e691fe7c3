#include "dunkl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dunkl {

void OperatorReport::finalize() {
  if (skipped) {
    abs_error = rel_error = 0.0;
    pass = true;
    return;
  }
  const double e = error();
  pass = std::isfinite(e) && e <= tolerance;
}

OperatorReport compare(std::string name, std::vector<double> computed, std::vector<double> reference, double tolerance,
                       ErrorMode mode, std::string provenance, double scale) {
  if (computed.size() != reference.size()) throw std::invalid_argument("compare: length mismatch in " + name);
  OperatorReport r;
  r.name = std::move(name);
  r.provenance = std::move(provenance);
  r.tolerance = tolerance;
  r.mode = mode;
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const double d = std::abs(computed[i] - reference[i]);
    err = std::isnan(d) ? d : std::max(err, d);
    ref = std::max(ref, std::abs(reference[i]));
  }
  if (!(scale > 0.0)) scale = ref > 0.0 ? ref : 1.0;
  r.abs_error = err;
  r.rel_error = err / scale;
  r.computed = std::move(computed);
  r.reference = std::move(reference);
  r.finalize();
  return r;
}

OperatorReport scalar_report(std::string name, double error, double tolerance, ErrorMode mode, std::string provenance) {
  OperatorReport r;
  r.name = std::move(name);
  r.provenance = std::move(provenance);
  r.tolerance = tolerance;
  r.mode = mode;
  r.abs_error = r.rel_error = error;
  r.finalize();
  return r;
}

OperatorReport skipped_report(std::string name, std::string reason) {
  OperatorReport r;
  r.name = std::move(name);
  r.skipped = true;
  r.note = std::move(reason);
  r.provenance = "range logic";
  r.finalize();
  return r;
}

Json to_json(const OperatorReport& r, bool with_runtime) {
  Json j;
  j["name"] = r.name;
  if (!r.suite.empty()) j["suite"] = r.suite;
  j["inputs"] = r.inputs;
  j["computed"] = r.computed;
  j["reference"] = r.reference;
  j["provenance"] = r.provenance;
  j["abs_error"] = r.abs_error;
  j["rel_error"] = r.rel_error;
  j["error_mode"] = r.mode == ErrorMode::absolute ? "absolute" : "relative";
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["skipped"] = r.skipped;
  if (!r.note.empty()) j["note"] = r.note;
  if (with_runtime) j["runtime_s"] = r.runtime_s;
  return j;
}

Json reports_to_json(const std::vector<OperatorReport>& reports, bool with_runtime) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  j["passed"] = passed;
  j["total"] = reports.size();
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, with_runtime));
  j["reports"] = std::move(arr);
  return j;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_value(std::ostream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        write_value(os, it.value(), indent, depth + 1);
      }
      os << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      if (scalars) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_value(os, j[i], indent, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_value(os, j[i], indent, depth + 1);
      }
      os << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no NaN/Infinity literals; emit them as strings
      if (!std::isfinite(v)) {
        os << '"' << format_double(v) << '"';
      } else {
        os << format_double(v);
      }
      return;
    }
    default: os << j.dump(); return;
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

}  // namespace

void write_json(std::ostream& os, const Json& j, int indent) {
  write_value(os, j, indent, 0);
  os << "\n";
}

void write_complex_csv(std::ostream& os, const ComplexTable& table) {
  if (table.x.size() != table.values.size()) throw std::invalid_argument("write_complex_csv: length mismatch");
  for (const auto& c : table.comments) os << "# " << c << "\n";
  os << "x,re,im\n";
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    os << format_double(table.x[i]) << "," << format_double(table.values[i].real()) << ","
       << format_double(table.values[i].imag()) << "\n";
  }
}

ComplexTable read_complex_csv(std::istream& is) {
  ComplexTable t;
  std::string line;
  bool header = false;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    const auto cols = split_csv(line);
    if (!header) {
      header = true;
      if (cols.size() < 2 || cols[0] != "x") throw std::runtime_error("CSV: expected header 'x,re,im' or 'x,value'");
      continue;
    }
    if (cols.size() < 2) throw std::runtime_error("CSV: too few columns on line " + std::to_string(lineno));
    try {
      t.x.push_back(std::stod(cols[0]));
      const double re = std::stod(cols[1]);
      const double im = cols.size() > 2 ? std::stod(cols[2]) : 0.0;
      t.values.emplace_back(re, im);
    } catch (const std::exception&) {
      throw std::runtime_error("CSV: bad number on line " + std::to_string(lineno));
    }
  }
  if (!header) throw std::runtime_error("CSV: missing header");
  return t;
}

void write_radial_csv(std::ostream& os, const std::vector<double>& r, const std::vector<double>& values,
                      const std::string& value_name, const std::vector<std::string>& comments) {
  if (r.size() != values.size()) throw std::invalid_argument("write_radial_csv: length mismatch");
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "r," << value_name << "\n";
  for (std::size_t i = 0; i < r.size(); ++i) os << format_double(r[i]) << "," << format_double(values[i]) << "\n";
}

}  // namespace dunkl
