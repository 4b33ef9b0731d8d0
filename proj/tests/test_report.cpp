#include "doctest.h"

#include <cmath>
#include <string>

#include "json.hpp"
#include "qcs/report.hpp"

using namespace qcs;

namespace {

SuiteReport sample_report() {
  SuiteReport r;
  r.config.suite = "observables";
  r.config.trunc_dim = 16;
  r.config.radial_order = 11;
  r.config.theta_nodes = 37;
  r.config.tolerance = 0.0;
  r.config.seed = 42;
  r.wall_ms = 3.25;
  CheckRecord a;
  a.id = "ladder-adjoint";
  a.anchor = "A_qbar = adjoint(A_q)";
  a.max_error = 1.0 / 3.0 * 1e-15;
  a.tolerance = 1e-13;
  a.passed = true;
  r.checks.push_back(a);
  CheckRecord b;
  b.id = "momentum-witness";
  b.anchor = "<u|(alpha O)v> != <(alphabar O^t)u|v>, witness pair";
  b.max_error = 0.0;
  b.tolerance = 0.0;
  b.passed = true;
  b.values.emplace_back("forward", Quaternion(0, 0, 0, -1.0 / std::sqrt(2.0)));
  b.values.emplace_back("backward", Quaternion(0, 0, 0, 1.0 / std::sqrt(2.0)));
  r.checks.push_back(b);
  return r;
}

// drop every line mentioning the wall clock, the one non-deterministic field
std::string strip_wall(const std::string& s) {
  std::string out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string::npos) end = s.size();
    const std::string line = s.substr(start, end - start);
    if (line.find("wall") == std::string::npos) out += line + '\n';
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("doubles are printed with 17 significant digits") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1e-13) == "1e-13");
  CHECK(format_double(std::sqrt(2.0)) == "1.4142135623730951");
  CHECK(format_double(-1.0 / 3.0) == "-0.33333333333333331");
}

TEST_CASE("json output parses and round-trips every numeric field") {
  const SuiteReport r = sample_report();
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["suite"] == "observables");
  CHECK(j["config"]["trunc_dim"] == 16);
  CHECK(j["config"]["radial_order"] == 11);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].size() == 2);
  // 17 significant digits reproduce the stored doubles bitwise
  CHECK(j["checks"][0]["max_error"].get<double>() == r.checks[0].max_error);
  CHECK(j["checks"][0]["tolerance"].get<double>() == 1e-13);
  CHECK(j["checks"][0]["id"] == "ladder-adjoint");
  CHECK(!j["checks"][0].contains("values"));
  const auto& vals = j["checks"][1]["values"];
  REQUIRE(vals["forward"].size() == 4);
  CHECK(vals["forward"][3].get<double>() == -1.0 / std::sqrt(2.0));
  CHECK(vals["backward"][3].get<double>() == 1.0 / std::sqrt(2.0));
  CHECK(j["wall_ms"].get<double>() == 3.25);
}

TEST_CASE("json escapes quotes, backslashes, and control characters") {
  SuiteReport r;
  r.config.suite = "demo";
  CheckRecord c;
  c.id = "weird";
  c.anchor = "say \"hi\"\\path\nnext\tline";
  c.passed = true;
  r.checks.push_back(c);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["checks"][0]["anchor"] == "say \"hi\"\\path\nnext\tline");
}

TEST_CASE("empty check list still serialises to valid json") {
  SuiteReport r;
  r.config.suite = "empty";
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["checks"].empty());
  CHECK(j["passed"] == true);
}

TEST_CASE("csv has one row per check and quotes awkward fields") {
  SuiteReport r = sample_report();
  r.checks[0].anchor = "commutator [A, B], truncated";
  const std::string csv = to_csv(r);
  CHECK(csv.find("suite,id,anchor,max_error,tolerance,passed\n") == 0);
  CHECK(csv.find("\"commutator [A, B], truncated\"") != std::string::npos);
  std::size_t rows = 0;
  for (const char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 3);
}

TEST_CASE("text output marks failures and prints witness values") {
  SuiteReport r = sample_report();
  r.checks[0].passed = false;
  const std::string text = to_text(r);
  CHECK(text.find("FAIL ladder-adjoint") != std::string::npos);
  CHECK(text.find("PASS momentum-witness") != std::string::npos);
  CHECK(text.find("1 failed") != std::string::npos);
  CHECK(text.find("forward = [0, 0, 0, -0.70710678118654746]") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs except the wall clock") {
  SuiteReport a = sample_report();
  SuiteReport b = sample_report();
  b.wall_ms = 99.75;
  CHECK(to_json(a) != to_json(b));
  CHECK(strip_wall(to_json(a)) == strip_wall(to_json(b)));
  CHECK(strip_wall(to_text(a)) == strip_wall(to_text(b)));
  // csv carries no timing at all
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("format dispatch accepts the three names and rejects others") {
  const SuiteReport r = sample_report();
  CHECK(format_report(r, "json") == to_json(r));
  CHECK(format_report(r, "csv") == to_csv(r));
  CHECK(format_report(r, "text") == to_text(r));
  CHECK_THROWS_AS(format_report(r, "yaml"), std::invalid_argument);
}

}  // TEST_SUITE
