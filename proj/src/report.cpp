#include "qcs/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace qcs {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

// quote a CSV field only when it needs quoting
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += '"';
  return out;
}

std::string quaternion_array(const Quaternion& q) {
  return "[" + format_double(q.x0) + ", " + format_double(q.x1) + ", " +
         format_double(q.x2) + ", " + format_double(q.x3) + "]";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const SuiteReport& r) {
  std::string out = "{\n";
  out += "  \"suite\": \"" + json_escape(r.config.suite) + "\",\n";
  out += "  \"config\": {\n";
  out += "    \"trunc_dim\": " + std::to_string(r.config.trunc_dim) + ",\n";
  out += "    \"radial_order\": " + std::to_string(r.config.radial_order) + ",\n";
  out += "    \"theta_nodes\": " + std::to_string(r.config.theta_nodes) + ",\n";
  out += "    \"phi_order\": " + std::to_string(r.config.phi_order) + ",\n";
  out += "    \"psi_nodes\": " + std::to_string(r.config.psi_nodes) + ",\n";
  out += "    \"tolerance\": " + format_double(r.config.tolerance) + ",\n";
  out += "    \"seed\": " + std::to_string(r.config.seed) + "\n";
  out += "  },\n";
  out += "  \"wall_ms\": " + format_double(r.wall_ms) + ",\n";
  out += "  \"passed\": " + std::string(r.all_passed() ? "true" : "false") + ",\n";
  out += "  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckRecord& c = r.checks[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\n";
    out += "      \"id\": \"" + json_escape(c.id) + "\",\n";
    out += "      \"anchor\": \"" + json_escape(c.anchor) + "\",\n";
    out += "      \"max_error\": " + format_double(c.max_error) + ",\n";
    out += "      \"tolerance\": " + format_double(c.tolerance) + ",\n";
    out += "      \"passed\": " + std::string(c.passed ? "true" : "false");
    if (!c.values.empty()) {
      out += ",\n      \"values\": {";
      for (std::size_t k = 0; k < c.values.size(); ++k) {
        out += k == 0 ? "\n" : ",\n";
        out += "        \"" + json_escape(c.values[k].first) +
               "\": " + quaternion_array(c.values[k].second);
      }
      out += "\n      }";
    }
    out += "\n    }";
  }
  out += r.checks.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

std::string to_csv(const SuiteReport& r) {
  std::string out = "suite,id,anchor,max_error,tolerance,passed\n";
  for (const CheckRecord& c : r.checks) {
    out += csv_field(r.config.suite) + ',' + csv_field(c.id) + ',' +
           csv_field(c.anchor) + ',' + format_double(c.max_error) + ',' +
           format_double(c.tolerance) + ',' + (c.passed ? "true" : "false") + '\n';
  }
  return out;
}

std::string to_text(const SuiteReport& r) {
  std::string out = "suite " + r.config.suite + ": " +
                    std::to_string(r.checks.size()) + " checks, " +
                    std::to_string(r.checks.size() - r.failed_count()) +
                    " passed, " + std::to_string(r.failed_count()) + " failed";
  out += " (trunc_dim " + std::to_string(r.config.trunc_dim) + ", wall " +
         format_double(r.wall_ms) + " ms)\n";
  for (const CheckRecord& c : r.checks) {
    std::string line = c.passed ? "PASS " : "FAIL ";
    line += c.id;
    if (line.size() < 42) line.append(42 - line.size(), ' ');
    line += " max_err=" + format_double(c.max_error);
    line += " tol=" + format_double(c.tolerance);
    line += "  " + c.anchor;
    out += line + '\n';
    for (const auto& [name, q] : c.values)
      out += "     " + name + " = " + quaternion_array(q) + '\n';
  }
  return out;
}

std::string format_report(const SuiteReport& r, const std::string& format) {
  if (format == "json") return to_json(r);
  if (format == "csv") return to_csv(r);
  if (format == "text") return to_text(r);
  throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace qcs
