#pragma once

// Named verification suites.  Each suite re-derives a module's guarantees at
// runtime with the configured truncation, grid orders, and seed, and returns
// one record per check.  "all" runs every suite and prefixes the check ids
// with the suite name.

#include <string>
#include <vector>

#include "qcs/report.hpp"

namespace qcs {

// the concrete suites, in execution order of "all"
const std::vector<std::string>& suite_names();

// true for every concrete name and for "all"
bool is_suite_name(const std::string& name);

// throws std::invalid_argument for unknown suite names and propagates
// std::invalid_argument/std::domain_error from unusable configurations
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace qcs
