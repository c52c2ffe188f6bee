// poco: decide whether the power graph of a finite group is a cograph, two
// independent ways, and classify the group when it is.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "poco/classify.hpp"
#include "poco/graphs.hpp"
#include "poco/suite.hpp"

namespace {

int64_t default_cap() {
  if (const char* env = std::getenv("POCO_MAX_ORDER")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
    std::cerr << "ignoring malformed POCO_MAX_ORDER='" << env << "'\n";
  }
  return 100000;
}

int exit_code_for(const poco::Error& e) {
  switch (e.code()) {
    case poco::Errc::InvalidParameters:
    case poco::Errc::BadFamilyParameter:
      return 2;
    case poco::Errc::CapExceeded:
      return 3;
    default:
      return 1;
  }
}

int cmd_analyze(const std::string& group, bool json, const std::string& dot_path,
                int64_t max_order) {
  poco::zoo::GroupSpec spec = poco::zoo::parse(group);
  poco::classify::Config cfg;
  cfg.max_order = max_order;
  poco::classify::Report report = poco::classify::analyze(spec, cfg);

  if (!dot_path.empty()) {
    if (report.reduced_vertices > 2000)
      poco::fail(poco::Errc::CapExceeded,
                 "reduced graph has " + std::to_string(report.reduced_vertices) +
                     " vertices; DOT export is limited to 2000");
    poco::graphs::Graph g(report.reduced_vertices);
    for (auto [i, j] : report.reduced_edges) g.add_edge(i, j);
    std::ofstream out(dot_path);
    if (!out) poco::fail(poco::Errc::InvalidParameters, "cannot write " + dot_path);
    out << poco::graphs::to_dot(g, report.reduced_labels);
  }

  if (json) std::cout << poco::classify::to_json(report).dump(2) << "\n";
  else std::cout << poco::classify::to_text(report);
  return 0;
}

int cmd_scan(const std::string& family, int64_t q_max, bool json) {
  poco::numth::Family fam;
  if (!poco::numth::family_from_string(family, &fam))
    poco::fail(poco::Errc::InvalidParameters,
               "unknown family '" + family + "' (try psl2odd, psl2even, sz)");
  auto rows = poco::numth::scan(fam, q_max);
  if (json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) out.push_back(poco::numth::to_json(row));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << poco::numth::scan_table_text(rows);
  }
  return 0;
}

int cmd_verify(const std::string& suite, int64_t max_order, int jobs) {
  poco::classify::Config cfg;
  cfg.max_order = max_order;
  auto results = poco::suite::run_suite(suite, cfg, jobs);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "  (" << r.ms << " ms)\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-graph cograph toolkit for finite groups"};
  app.require_subcommand(1);

  int64_t max_order = default_cap();
  int jobs = 1;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "analyze one group construction");
  std::string group;
  std::string dot_path;
  analyze->add_option("--group", group, "group spec, e.g. psl2:7 or sdpq:5,2,2")->required();
  analyze->add_flag("--json", json, "emit the report as JSON");
  analyze->add_option("--dot", dot_path, "write the reduced power graph as DOT");
  analyze->add_option("--max-order", max_order, "order cap for enumeration")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan-q", "admissibility scan over prime powers");
  std::string family;
  int64_t q_max = 0;
  scan->add_option("--family", family, "psl2odd, psl2even, or sz")->required();
  scan->add_option("--max", q_max, "largest q to test")->required();
  scan->add_flag("--json", json, "emit rows as JSON");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "zoo-fast, zoo-full, graphs, or numth")->required();
  verify->add_option("--jobs", jobs, "parallel workers");
  verify->add_option("--max-order", max_order, "order cap for enumeration")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints usage diagnostics
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(group, json, dot_path, max_order);
    if (app.got_subcommand(scan)) return cmd_scan(family, q_max, json);
    if (app.got_subcommand(verify)) return cmd_verify(suite, max_order, jobs);
  } catch (const poco::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
