#pragma once

// Check records and their serialised forms.  Every numeric field is printed
// with 17 significant digits, which round-trips IEEE doubles exactly and
// keeps the output byte-deterministic; the wall-clock field is the single
// piece of output allowed to differ between identical runs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcs/quaternion.hpp"

namespace qcs {

struct CheckRecord {
  std::string id;      // stable slug, unique inside a suite
  std::string anchor;  // the identity the check verifies
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  // named witness values, serialised as [x0, x1, x2, x3]
  std::vector<std::pair<std::string, Quaternion>> values;
};

struct SuiteConfig {
  std::string suite;
  std::size_t trunc_dim = 16;
  int radial_order = 0;  // 0 derives the order from trunc_dim
  int theta_nodes = 0;   // 0 derives the count from trunc_dim
  int phi_order = 4;
  int psi_nodes = 8;
  double tolerance = 0.0;  // 0 keeps each check's built-in tolerance
  std::uint64_t seed = 1;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  double wall_ms = 0.0;

  std::size_t failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }
  bool all_passed() const { return failed_count() == 0; }
};

std::string format_double(double v);  // %.17g

std::string to_json(const SuiteReport& r);
std::string to_csv(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

// dispatch on "json" | "csv" | "text"; anything else throws invalid_argument
std::string format_report(const SuiteReport& r, const std::string& format);

}  // namespace qcs
