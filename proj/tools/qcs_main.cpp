// Command-line front end: run a verification suite and emit its report.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage error (bad flag, unknown suite or format), 3 configuration
// rejected by the library or unwritable output path.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcs/report.hpp"
#include "qcs/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical verification suites for quaternionic coherent-state "
      "quantization"};

  qcs::SuiteConfig cfg;
  cfg.suite = "all";
  std::string format = "json";
  std::string output;

  std::string suite_help = "Suite to run: all";
  for (const auto& name : qcs::suite_names()) suite_help += ", " + name;

  app.add_option("-s,--suite", cfg.suite, suite_help);
  app.add_option("-n,--trunc-dim", cfg.trunc_dim,
                 "Truncation dimension for operator checks (default 16)");
  app.add_option("--radial-order", cfg.radial_order,
                 "Radial quadrature order override (0 = derive from -n)");
  app.add_option("--theta-nodes", cfg.theta_nodes,
                 "Angular node count override (0 = derive from -n)");
  app.add_option("--phi-order", cfg.phi_order,
                 "Polar quadrature order (default 4)");
  app.add_option("--psi-nodes", cfg.psi_nodes,
                 "Azimuthal node count (default 8)");
  app.add_option("-t,--tolerance", cfg.tolerance,
                 "Override every check tolerance with this value");
  app.add_option("-f,--format", format, "Output format: json, csv, or text");
  app.add_option("-o,--output", output, "Write the report to this file");
  app.add_option("--seed", cfg.seed, "Seed for the randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help and --version exit cleanly
  }

  if (!qcs::is_suite_name(cfg.suite)) {
    std::cerr << "unknown suite: " << cfg.suite << "\n" << suite_help << "\n";
    return 2;
  }
  if (format != "json" && format != "csv" && format != "text") {
    std::cerr << "unknown format: " << format << " (expected json, csv, or text)\n";
    return 2;
  }

  qcs::SuiteReport report;
  try {
    report = qcs::run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration rejected: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "suite failed: " << e.what() << "\n";
    return 3;
  }

  const std::string body = qcs::format_report(report, format);
  if (output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << output << "\n";
      return 3;
    }
    out << body;
    if (!out.flush()) {
      std::cerr << "failed writing output file: " << output << "\n";
      return 3;
    }
  }

  return report.all_passed() ? 0 : 1;
}
