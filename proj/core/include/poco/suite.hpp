#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poco/classify.hpp"
#include "poco/numth.hpp"

namespace poco::suite {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  int64_t ms = 0;
};

// One zoo group with the verdict its construction promises.
struct ZooEntry {
  const char* spec;
  bool expected_cograph;
};

// fixed manifests: fast covers orders <= 2000, full everything up to the cap
const std::vector<ZooEntry>& zoo_manifest_fast();
const std::vector<ZooEntry>& zoo_manifest_full();

// analyze one manifest entry: verdicts must agree with each other, with the
// case assignment, and with the expectation
CheckResult check_zoo_entry(const ZooEntry& e, const classify::Config& cfg);

// every labeled graph on at most max_n vertices, recognition vs 4-subset scan
CheckResult check_cograph_exhaustive(int max_n, int jobs);
// seeded random graphs with up to max_n vertices
CheckResult check_cograph_random(int count, int max_n, uint64_t seed);
// complement / union / join closure on random cographs
CheckResult check_cograph_closure(uint64_t seed);
// full vs twin-reduced power graph agreement on small zoo groups
CheckResult check_twin_soundness(int64_t max_order);
// witness search absence matches recognition on zoo power graphs
CheckResult check_witness_agreement(int64_t max_order);

CheckResult check_factorize_roundtrip(int64_t up_to);
CheckResult check_order_class_oracle(int64_t up_to);
// scan rows against an independent trial-division classification
CheckResult check_scan_oracle(numth::Family family, int64_t q_max);

// named suites for the command line: zoo-fast, zoo-full, graphs, numth
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const classify::Config& cfg,
                                   int jobs);

}  // namespace poco::suite
