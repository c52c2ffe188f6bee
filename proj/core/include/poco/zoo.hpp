#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poco/group.hpp"

namespace poco::zoo {

// A construction request in the spec grammar family[:param[,param...]], e.g.
// "cyclic:6", "sdpq:5,2,2", "sz:8", "m10". Parameters are validated against
// the family constraints before anything is built.
struct GroupSpec {
  std::string family;
  std::vector<int64_t> params;
  std::string text;  // the original spelling
};

GroupSpec parse(const std::string& s);  // InvalidParameters on bad syntax

std::vector<std::string> families();

// Validates the parameters and returns the order the construction will have.
int64_t advertised_order(const GroupSpec& spec);

// Deterministic construction. CapExceeded when the advertised order (or an
// intermediate enumeration) passes the cap; InvariantViolated if the
// enumerated order ever disagrees with the advertised one.
grp::GroupPtr build(const GroupSpec& spec, int64_t cap);

// Family-specific structural checks on a built group (fixed-point-freeness,
// simplicity, module structure, and so on).
struct InvariantReport {
  bool ok = true;
  std::vector<std::string> checks;    // "name: ok" / "name: FAIL detail"
  std::vector<std::string> failures;  // failing check names
};
InvariantReport verify_spec_invariants(const GroupSpec& spec, grp::GroupPtr G);

}  // namespace poco::zoo
