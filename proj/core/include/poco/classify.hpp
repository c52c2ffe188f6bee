#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "poco/graphs.hpp"
#include "poco/group.hpp"
#include "poco/zoo.hpp"

namespace poco::classify {

struct Config {
  int64_t max_order = 100000;
};

// Decision for one group by one method. For the brute method a witness is
// present exactly when the verdict is negative, and it is a verified induced
// four-vertex path in the power graph, as element indices.
struct Verdict {
  bool is_power_cograph = false;
  std::optional<std::array<int, 4>> witness;
  std::string method;
};

enum class Theorem { NILPOTENT, SOLVABLE, NONSOLVABLE };
const char* to_string(Theorem t);

// Structural case assigned by the classification, e.g. S1..S5c for solvable
// groups and N1..N4 for non-solvable ones, or NOT_POWER_COGRAPH. Secondary
// lists the other matching cases when the case families overlap.
struct CaseAssignment {
  Theorem theorem = Theorem::SOLVABLE;
  std::string label = "NOT_POWER_COGRAPH";
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::string> secondary;
};

struct Report {
  std::string spec;
  int64_t order = 0;
  bool solvable = false;
  graphs::PrimeGraph prime_graph;
  graphs::ShapeClass shape;
  Verdict brute;
  Verdict centralizer;
  std::string centralizer_violation;
  CaseAssignment assignment;
  bool agreement = false;
  int64_t ms = 0;
  int reduced_vertices = 0;
  std::vector<std::pair<int, int>> reduced_edges;  // populated when small
  std::vector<std::string> reduced_labels;
};

// true iff one of the two distinct elements is a power of the other
bool power_adjacent(const grp::Group& G, int i, int j);
// the tuple induces a path a-b-c-d in the power graph (edges ab, bc, cd only)
bool verify_p4_witness(const grp::Group& G, const std::array<int, 4>& w);

// Exhaustive decision through the twin-reduced power graph; a negative
// verdict carries a verified induced-P4 witness lifted to element indices.
Verdict brute_power_cograph(const grp::Group& G);

// Decision by centralizer structure: for every element g of prime order p,
// a smaller prime q dividing |C(g)| forces C(g) = C_q x C_p, and a larger
// prime q forces a normal C_q with C(g)/N = <g> x C_{p^n}; additionally no
// such g with a non-p-power centralizer may be a p-th power.
struct CentralizerOutcome {
  Verdict verdict;
  std::string violation;  // human-readable first failure
};
CentralizerOutcome centralizer_verdict(grp::GroupPtr G);

CaseAssignment solvable_case(grp::GroupPtr G);     // NotSolvable otherwise
CaseAssignment nonsolvable_case(grp::GroupPtr G);  // NotNonsolvable otherwise

Report analyze(const zoo::GroupSpec& spec, const Config& cfg = {});
Report analyze_group(grp::GroupPtr G, const std::string& name, const Config& cfg = {});

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

// Identification of a simple group by order and order spectrum. Families:
// "psl2" (with q), "sz" (with q), "psl3_4". Multiple entries appear when
// distinct parameters give the same group (q = 4 and 5).
struct SimpleId {
  std::string family;
  int64_t q = 0;
};
std::vector<SimpleId> identify_simple(const grp::Group& G);

// Lift a tuple of quotient elements to parent elements realizing the same
// power-graph adjacency pattern, searching coset representatives. Q must be
// a quotient of *G by N. Succeeds under the coprimality condition
// gcd(|N|, |C_Q(t)|) = 1 for the tuple members.
std::optional<std::array<int, 4>> lift_quotient_tuple(const grp::Group& G, const grp::Group& Q,
                                                      const grp::Subgroup& N,
                                                      const std::array<int, 4>& tuple);

}  // namespace poco::classify
