// Acceptance suite: runs every acceptance criterion end to end and prints
// one pass/fail line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "poco/classify.hpp"
#include "poco/graphs.hpp"
#include "poco/group.hpp"
#include "poco/numth.hpp"
#include "poco/suite.hpp"
#include "poco/zoo.hpp"

using namespace poco;
using Clock = std::chrono::steady_clock;

namespace {

// ---------------------------------------------------------------------------
// shared analysis cache: several criteria look at the same groups
// ---------------------------------------------------------------------------

std::map<std::string, classify::Report> g_cache;

const classify::Report& report_for(const std::string& spec) {
  auto it = g_cache.find(spec);
  if (it == g_cache.end()) it = g_cache.emplace(spec, classify::analyze(zoo::parse(spec))).first;
  return it->second;
}

grp::GroupPtr build(const std::string& spec) { return zoo::build(zoo::parse(spec), 100000); }

// direct product of cyclic groups as disjoint cycles
grp::GroupPtr abelian_product(const std::vector<int>& factors) {
  int total = std::accumulate(factors.begin(), factors.end(), 0);
  std::vector<grp::Element> gens;
  int base = 0;
  for (int d : factors) {
    grp::Perm p;
    p.img.resize(total);
    std::iota(p.img.begin(), p.img.end(), 0);
    for (int i = 0; i < d; ++i) p.img[base + i] = static_cast<uint16_t>(base + (i + 1) % d);
    gens.push_back(p);
    base += d;
  }
  return grp::Group::generate(gens, 100000);
}

// multisets of cyclic factors >= 2 with the given product
void factor_multisets(int n, int min_factor, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit) {
  if (n == 1) {
    if (!cur.empty()) emit(cur);
    return;
  }
  for (int d = min_factor; d <= n; ++d) {
    if (n % d != 0) continue;
    cur.push_back(d);
    factor_multisets(n / d, d, cur, emit);
    cur.pop_back();
  }
}

bool expected_nilpotent_verdict(int64_t n) {
  if (n == 1) return true;
  auto cls = numth::order_class(n);
  return cls == numth::OrderClass::PRIME_POWER || cls == numth::OrderClass::TWO_DISTINCT_PRIMES;
}

// the parameter lists for the solvable family sweep
const std::vector<std::string>& sdpq_params() {
  static const std::vector<std::string> v = {
      "sdpq:5,2,2",  "sdpq:7,3,1",  "sdpq:13,2,2", "sdpq:13,3,1", "sdpq:11,5,1",
      "sdpq:17,2,3", "sdpq:19,3,2", "sdpq:29,7,1", "sdpq:31,5,1", "sdpq:41,2,3"};
  return v;
}
const std::vector<std::string>& frob2_params() {
  static const std::vector<std::string> v = {
      "frob2:7,13,2,1",  "frob2:5,13,2,2",  "frob2:7,13,3,1", "frob2:11,31,5,1",
      "frob2:7,19,3,1",  "frob2:13,37,3,1", "frob2:5,17,2,2", "frob2:13,17,2,2",
      "frob2:11,41,2,1", "frob2:7,29,2,1"};
  return v;
}
const std::vector<std::string>& frob4_params() {
  static const std::vector<std::string> v = {
      "frob4:7,13,2,3",  "frob4:7,19,2,3",  "frob4:13,19,2,3", "frob4:7,31,2,3",
      "frob4:13,31,2,3", "frob4:19,31,2,3", "frob4:7,37,2,3",  "frob4:13,37,2,3",
      "frob4:7,43,2,3",  "frob4:11,31,2,5"};
  return v;
}

// the groups of criteria 2-8, for the cross-method and shape sweeps
std::vector<std::string> suite_specs() {
  std::vector<std::string> specs = {"psl2:4",  "psl2:5",  "psl2:7",  "psl2:8",   "psl2:9",
                                    "psl2:11", "psl2:13", "psl2:16", "sz:8",     "psl3_4",
                                    "psl2:23", "pgl2:5",  "pgl2:7",  "pgl2:9",   "m10",
                                    "sym:6",   "pgl2:11", "sl2:5",   "heis3xC2", "natmod:4",
                                    "natmod:8"};
  for (const auto& lists : {sdpq_params(), frob2_params(), frob4_params()})
    specs.insert(specs.end(), lists.begin(), lists.end());
  return specs;
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

// each criterion returns an empty string on pass, else a failure description

std::string criterion_nilpotent() {
  for (int n = 1; n <= 200; ++n) {
    auto G = build("cyclic:" + std::to_string(n));
    bool verdict = classify::brute_power_cograph(*G).is_power_cograph;
    if (verdict != expected_nilpotent_verdict(n))
      return "cyclic:" + std::to_string(n) + " verdict mismatch";
  }
  int checked = 0;
  std::string failure;
  for (int n = 2; n <= 100; ++n) {
    std::vector<int> cur;
    factor_multisets(n, 2, cur, [&](const std::vector<int>& factors) {
      if (!failure.empty()) return;
      auto G = abelian_product(factors);
      ++checked;
      bool verdict = classify::brute_power_cograph(*G).is_power_cograph;
      if (verdict != expected_nilpotent_verdict(n)) {
        std::ostringstream os;
        os << "abelian order " << n << " [";
        for (int d : factors) os << d << " ";
        os << "] verdict mismatch";
        failure = os.str();
      }
    });
    if (!failure.empty()) return failure;
  }
  if (checked < 100) return "too few abelian groups enumerated";
  return "";
}

std::string criterion_simple_positive() {
  for (const char* s : {"psl2:4", "psl2:5", "psl2:7", "psl2:8", "psl2:9", "psl2:11", "psl2:13",
                        "psl2:16"}) {
    if (!report_for(s).brute.is_power_cograph) return std::string(s) + " should be a cograph";
  }
  for (const char* s : {"sz:8", "psl3_4"}) {
    const auto& r = report_for(s);
    if (!r.brute.is_power_cograph) return std::string(s) + " should be a cograph";
    if (r.ms >= 120000) return std::string(s) + " exceeded the 120 s budget";
  }
  return "";
}

std::string criterion_simple_negative() {
  const auto& r = report_for("psl2:23");
  if (r.brute.is_power_cograph) return "psl2:23 should not be a cograph";
  if (!r.brute.witness) return "psl2:23 lacks a witness";
  auto G = build("psl2:23");
  if (!classify::verify_p4_witness(*G, *r.brute.witness)) return "psl2:23 witness does not verify";
  if (r.ms >= 30000) return "psl2:23 exceeded the 30 s budget";
  return "";
}

std::string criterion_almost_simple() {
  auto t0 = Clock::now();
  for (const char* s : {"pgl2:5", "pgl2:7", "pgl2:9", "m10"})
    if (!report_for(s).brute.is_power_cograph) return std::string(s) + " should be a cograph";
  for (const char* s : {"sym:6", "pgl2:11"})
    if (report_for(s).brute.is_power_cograph) return std::string(s) + " should not be a cograph";
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  if (ms >= 60000) return "almost-simple list exceeded the 60 s budget";
  return "";
}

std::string criterion_frobenius_complement() {
  const auto& r = report_for("sl2:5");
  if (r.brute.is_power_cograph) return "sl2:5 should not be a cograph";
  if (r.ms >= 5000) return "sl2:5 exceeded the 5 s budget";
  return "";
}

std::string criterion_erratum() {
  const auto& r = report_for("heis3xC2");
  if (r.brute.is_power_cograph) return "heis3xC2 should not be a cograph";
  if (r.ms >= 1000) return "heis3xC2 exceeded the 1 s budget";
  auto G = build("heis3xC2");
  for (int i = 1; i < G->order(); ++i) {
    if (G->order_of(i) != 3) continue;
    grp::Subgroup cent = grp::centralizer(*G, i);
    // an order-18 centralizer of an order-3 element breaks the required
    // C_2 x C_3 centralizer form
    if (cent.order() == 18) return "";
  }
  return "no order-3 element with an order-18 centralizer";
}

std::string criterion_natural_module() {
  const auto& r4 = report_for("natmod:4");
  if (!r4.brute.is_power_cograph) return "natmod:4 should be a cograph";
  if (r4.assignment.label != "N3") return "natmod:4 case is " + r4.assignment.label;
  if (r4.ms >= 30000) return "natmod:4 exceeded the 30 s budget";

  auto G = build("natmod:4");
  auto mins = grp::minimal_normal_subgroups(*G);
  if (mins.size() != 1 || mins[0].order() != 16)
    return "natmod:4 minimal normal subgroup is not of order 16";
  if (!grp::is_abelian_subgroup(*G, mins[0])) return "natmod:4 module is not abelian";
  for (int x : mins[0].elems)
    if (x != 0 && G->order_of(x) != 2) return "natmod:4 module is not elementary abelian";
  for (const auto& cls : grp::prime_order_classes(*G)) {
    if (G->order_of(cls[0]) == 2) continue;
    for (int x : mins[0].elems)
      if (x != 0 && G->conj(cls[0], x) == x)
        return "an odd-order element of natmod:4 fixes a module vector";
  }

  const auto& r8 = report_for("natmod:8");
  if (!r8.brute.is_power_cograph) return "natmod:8 should be a cograph";
  if (r8.ms >= 600000) return "natmod:8 exceeded the 10 min budget";
  return "";
}

std::string criterion_solvable_families() {
  auto t0 = Clock::now();
  auto expect = [&](const std::vector<std::string>& specs, const char* label) -> std::string {
    for (const auto& s : specs) {
      const auto& r = report_for(s);
      if (r.order > 5000) return s + " exceeds the order bound of the criterion";
      if (!r.brute.is_power_cograph) return s + " should be a cograph";
      if (r.assignment.label != label)
        return s + " classified as " + r.assignment.label + ", expected " + label;
    }
    return "";
  };
  if (auto e = expect(sdpq_params(), "S2"); !e.empty()) return e;
  if (auto e = expect(frob2_params(), "S3"); !e.empty()) return e;
  if (auto e = expect(frob4_params(), "S4"); !e.empty()) return e;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  if (ms >= 60000) return "solvable families exceeded the 60 s budget";
  return "";
}

std::string criterion_centralizer_iff() {
  // the groups of criteria 1-8, then the named extras
  for (int n = 1; n <= 200; ++n) {
    auto G = build("cyclic:" + std::to_string(n));
    if (classify::brute_power_cograph(*G).is_power_cograph !=
        classify::centralizer_verdict(G).verdict.is_power_cograph)
      return "cyclic:" + std::to_string(n) + " methods disagree";
  }
  std::string failure;
  for (int n = 2; n <= 100 && failure.empty(); ++n) {
    std::vector<int> cur;
    factor_multisets(n, 2, cur, [&](const std::vector<int>& factors) {
      if (!failure.empty()) return;
      auto G = abelian_product(factors);
      if (classify::brute_power_cograph(*G).is_power_cograph !=
          classify::centralizer_verdict(G).verdict.is_power_cograph)
        failure = "abelian of order " + std::to_string(n) + ": methods disagree";
    });
  }
  if (!failure.empty()) return failure;

  for (const auto& s : suite_specs()) {
    const auto& r = report_for(s);
    if (r.brute.is_power_cograph != r.centralizer.is_power_cograph)
      return s + " methods disagree";
  }
  std::vector<std::string> extras = {"sym:4", "sym:5", "alt:6", "sl2:7",
                                     "quat:8", "quat:16", "quat:32", "quat:64"};
  for (int n = 1; n <= 30; ++n) extras.push_back("dihedral:" + std::to_string(n));
  for (const auto& s : extras) {
    auto G = build(s);
    if (classify::brute_power_cograph(*G).is_power_cograph !=
        classify::centralizer_verdict(G).verdict.is_power_cograph)
      return s + " methods disagree";
  }
  return "";
}

std::string criterion_prime_graph_shapes() {
  std::vector<std::string> specs = suite_specs();
  for (const char* s : {"sym:4", "sym:5", "alt:6", "sl2:7", "quat:16", "quat:64", "dihedral:6",
                        "dihedral:9", "dihedral:15", "dihedral:21", "cyclic:6", "cyclic:49"})
    specs.push_back(s);
  for (const auto& s : specs) {
    const auto& r = report_for(s);
    if (!r.brute.is_power_cograph) continue;
    if (r.solvable) {
      using graphs::ShapeTag;
      bool allowed = r.shape.tag == ShapeTag::NULL_GRAPH || r.shape.tag == ShapeTag::SINGLE_EDGE ||
                     r.shape.tag == ShapeTag::P3_PATH || r.shape.tag == ShapeTag::SUBGRAPH_2K2;
      if (!allowed)
        return s + " is a solvable cograph group with shape " +
               graphs::to_string(r.shape.tag);
    }
    if (!r.shape.min_star_components)
      return s + " has a prime-graph component that is not a least-prime star";
  }
  return "";
}

std::string criterion_scans() {
  auto t0 = Clock::now();
  auto odd = suite::check_scan_oracle(numth::Family::PSL2_ODD, 100);
  if (!odd.pass) return "odd scan disagrees with the divisor oracle";
  auto sz = suite::check_scan_oracle(numth::Family::SZ, 200);
  if (!sz.pass) return "Suzuki scan disagrees with the divisor oracle";
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  if (ms >= 5000) return "scans exceeded the 5 s budget";
  return "";
}

std::string criterion_graph_engine() {
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  auto t0 = Clock::now();
  auto ex = suite::check_cograph_exhaustive(8, jobs);
  if (!ex.pass) return "exhaustive check failed: " + ex.detail;
  auto rnd = suite::check_cograph_random(1000, 12, 20240811);
  if (!rnd.pass) return "random check failed: " + rnd.detail;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  if (ms >= 60000) return "graph engine checks exceeded the 60 s budget";
  return "";
}

std::string criterion_sz_e_bound() {
  const auto& r = report_for("sz:8");
  const auto& data = r.assignment.data;
  if (!data.contains("theorem_literal") || data["theorem_literal"] != "excluded_by_e_bound")
    return "sz:8 report does not flag the theorem's e-bound";
  if (!data.contains("empirical") || data["empirical"] != true)
    return "sz:8 report does not carry the empirical verdict";
  if (!r.brute.is_power_cograph) return "sz:8 should be a cograph";
  return "";
}

struct Criterion {
  int id;
  const char* title;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "nilpotent groups: prime power order or cyclic of order pq", criterion_nilpotent},
      {2, "simple positives: psl2 family, sz:8, psl3_4", criterion_simple_positive},
      {3, "simple negative: psl2:23 with a verified witness", criterion_simple_negative},
      {4, "almost simple: pgl2:5/7/9 and m10 pass, sym:6 and pgl2:11 fail",
       criterion_almost_simple},
      {5, "sl2:5 is not a cograph group", criterion_frobenius_complement},
      {6, "heis3xC2 fails with an order-18 centralizer of an order-3 element",
       criterion_erratum},
      {7, "natural module extensions natmod:4 and natmod:8", criterion_natural_module},
      {8, "solvable families sdpq/frob2/frob4 match their case labels",
       criterion_solvable_families},
      {9, "brute and centralizer verdicts agree everywhere", criterion_centralizer_iff},
      {10, "prime graph shapes of cograph groups", criterion_prime_graph_shapes},
      {11, "admissibility scans match the divisor oracle", criterion_scans},
      {12, "graph engine vs exhaustive and random oracles", criterion_graph_engine},
      {13, "sz:8 carries the e-bound flag next to the empirical verdict",
       criterion_sz_e_bound},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    std::string result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (result.empty()) {
      std::printf("criterion %02d PASS (%6lld ms)  %s\n", c.id, static_cast<long long>(ms),
                  c.title);
    } else {
      std::printf("criterion %02d FAIL (%6lld ms)  %s  [%s]\n", c.id,
                  static_cast<long long>(ms), c.title, result.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", static_cast<int>(criteria.size()) - failures,
              static_cast<int>(criteria.size()));
  return failures == 0 ? 0 : 1;
}
