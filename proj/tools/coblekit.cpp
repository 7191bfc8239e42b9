#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coblekit/suites.hpp"

namespace {

int finish(coblekit::VerificationReport& report, const std::string& json_path, bool no_timing) {
  if (no_timing) report.zero_timings();
  report.print_table(std::cout);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << report.to_json().dump(2) << "\n";
  }
  return report.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace coblekit;

  CLI::App app{"Exact verification of the Igusa quartic, its 15-nodal sections and their symmetry groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  bool no_timing = false;
  app.add_option("--json", json_path, "Write the canonical JSON report to this path");
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-identical output");

  auto* config = app.add_subcommand("config", "Incidence configuration and its automorphism group");
  auto* igusa = app.add_subcommand("igusa", "Igusa quartic: invariance, singular lines, tangent hyperplanes");
  auto* scan = app.add_subcommand("scan", "Exhaustive singular-point scan over F_p");
  std::uint64_t prime = 5;
  scan->add_option("--prime", prime, "Prime p >= 5")->required();
  auto* section = app.add_subcommand("section", "Nodes of one hyperplane section");
  std::string form_text;
  section->add_option("--form", form_text, "Linear form, e.g. x6 or \"x1+2x2\"")->required();
  auto* stabilizers = app.add_subcommand("stabilizers", "Hyperplane stabilizers in S6");
  auto* signatures = app.add_subcommand("signatures", "Decomposition signatures of the hyperplane families");
  auto* d5 = app.add_subcommand("d5", "D5 lattice invariant ranks");
  auto* sarkisov = app.add_subcommand("sarkisov", "Intersection arithmetic of the three-point link");
  long long bound = 10000;
  sarkisov->add_option("--bound", bound, "Enumeration bound (>= 10)")->check(CLI::Range(10LL, 1000000000LL));
  auto* classify = app.add_subcommand("classify", "Admissible subgroups of S5 x C2");
  auto* all = app.add_subcommand("all", "Every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Workspace ws;
  VerificationReport report(default_header());
  try {
    if (config->parsed()) report.add(config_suite(ws));
    if (igusa->parsed()) report.add(igusa_suite(ws));
    if (scan->parsed()) {
      if (prime < 5 || !is_prime(prime)) {
        std::cerr << "--prime must be a prime >= 5\n";
        return 2;
      }
      report.add(scan_suite(ws, {prime}));
    }
    if (section->parsed()) report.add(section_suite(ws, parse_linear_form(form_text)));
    if (stabilizers->parsed()) report.add(stabilizer_suite());
    if (signatures->parsed()) report.add(signature_suite());
    if (d5->parsed()) report.add(d5_suite());
    if (sarkisov->parsed()) report.add(sarkisov_suite(bound));
    if (classify->parsed()) report.add(classify_suite(ws));
    if (all->parsed()) report = run_all(ws);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    throw;
  }
  return finish(report, json_path, no_timing);
}
