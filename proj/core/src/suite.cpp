#include "poco/suite.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "poco/graphs.hpp"

namespace poco::suite {

using Clock = std::chrono::steady_clock;

namespace {

int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

CheckResult make_result(const std::string& name, bool pass, const std::string& detail,
                        Clock::time_point t0) {
  return CheckResult{name, pass, detail, ms_since(t0)};
}

// independent oracle: some 4-subset induces exactly 3 edges with degree
// multiset {1,1,2,2}
bool has_p4_by_subsets(const graphs::Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int v[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.edge(v[i], v[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges != 3) continue;
          int ones = 0, twos = 0;
          for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) ++ones;
            if (deg[i] == 2) ++twos;
          }
          if (ones == 2 && twos == 2) return true;
        }
  return false;
}

graphs::Graph random_graph(std::mt19937& rng, int n, double p) {
  graphs::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

graphs::Graph disjoint_union(const graphs::Graph& a, const graphs::Graph& b) {
  graphs::Graph g(a.n() + b.n());
  for (auto [i, j] : a.edges_sorted()) g.add_edge(i, j);
  for (auto [i, j] : b.edges_sorted()) g.add_edge(a.n() + i, a.n() + j);
  return g;
}

graphs::Graph join_graphs(const graphs::Graph& a, const graphs::Graph& b) {
  graphs::Graph g = disjoint_union(a, b);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < b.n(); ++j) g.add_edge(i, a.n() + j);
  return g;
}

graphs::Graph random_cograph(std::mt19937& rng, int budget) {
  if (budget <= 1 || rng() % 3 == 0) return graphs::Graph(1);
  int left = 1 + static_cast<int>(rng() % (budget - 1));
  graphs::Graph a = random_cograph(rng, left);
  graphs::Graph b = random_cograph(rng, budget - left);
  return rng() % 2 ? disjoint_union(a, b) : join_graphs(a, b);
}

graphs::Graph complement_of(const graphs::Graph& g) {
  graphs::Graph c(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.edge(i, j)) c.add_edge(i, j);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// zoo manifests
// ---------------------------------------------------------------------------

const std::vector<ZooEntry>& zoo_manifest_fast() {
  static const std::vector<ZooEntry> manifest = {
      {"cyclic:1", true},       {"cyclic:6", true},        {"cyclic:8", true},
      {"cyclic:12", false},     {"cyclic:15", true},       {"cyclic:30", false},
      {"cyclic:35", true},      {"cyclic:49", true},       {"cyclic:60", false},
      {"cyclic:121", true},     {"cyclic:210", false},     {"dihedral:3", true},
      {"dihedral:5", true},     {"dihedral:6", true},      {"dihedral:9", true},
      {"dihedral:10", true},    {"dihedral:12", false},    {"dihedral:14", true},
      {"dihedral:15", true},    {"dihedral:18", false},    {"dihedral:21", true},
      {"dihedral:30", false},   {"quat:8", true},          {"quat:16", true},
      {"quat:32", true},        {"quat:64", true},         {"sym:3", true},
      {"sym:4", true},          {"sym:5", true},           {"sym:6", false},
      {"alt:4", true},          {"alt:5", true},           {"alt:6", true},
      {"heis3", true},          {"heis3xC2", false},       {"sdpq:5,2,2", true},
      {"sdpq:7,3,1", true},     {"sdpq:13,2,2", true},     {"sdpq:41,2,3", true},
      {"frob2:7,13,2,1", true}, {"frob2:5,13,2,2", true},  {"frob2:7,13,3,1", true},
      {"frob4:7,13,2,3", true}, {"sl2:2", true},           {"sl2:3", false},
      {"sl2:5", false},         {"sl2:7", false},          {"psl2:4", true},
      {"psl2:5", true},         {"psl2:7", true},          {"psl2:8", true},
      {"psl2:9", true},         {"psl2:11", true},         {"psl2:13", true},
      {"pgl2:5", true},         {"pgl2:7", true},          {"pgl2:9", true},
      {"pgl2:11", false},       {"m10", true},             {"natmod:4", true},
  };
  return manifest;
}

const std::vector<ZooEntry>& zoo_manifest_full() {
  static const std::vector<ZooEntry> manifest = [] {
    std::vector<ZooEntry> m = zoo_manifest_fast();
    const ZooEntry extra[] = {
        {"psl2:16", true},  {"psl2:17", true},         {"psl2:19", true},
        {"psl2:23", false}, {"psl2:25", false},        {"psl2:27", true},
        {"sym:7", false},   {"alt:7", false},          {"alt:8", false},
        {"psl3_4", true},   {"sz:8", true},            {"natmod:8", true},
        {"frob4:11,31,2,5", true},
    };
    m.insert(m.end(), std::begin(extra), std::end(extra));
    return m;
  }();
  return manifest;
}

CheckResult check_zoo_entry(const ZooEntry& e, const classify::Config& cfg) {
  auto t0 = Clock::now();
  std::string name = std::string("zoo ") + e.spec;
  try {
    classify::Report r = classify::analyze(zoo::parse(e.spec), cfg);
    std::ostringstream detail;
    detail << "order " << r.order << ", brute " << (r.brute.is_power_cograph ? "yes" : "no")
           << ", centralizer " << (r.centralizer.is_power_cograph ? "yes" : "no") << ", case "
           << r.assignment.label;
    bool pass = r.agreement && r.brute.is_power_cograph == e.expected_cograph;
    if (!pass) detail << ", expected " << (e.expected_cograph ? "yes" : "no");
    return make_result(name, pass, detail.str(), t0);
  } catch (const std::exception& ex) {
    return make_result(name, false, ex.what(), t0);
  }
}

// ---------------------------------------------------------------------------
// graph engine checks
// ---------------------------------------------------------------------------

namespace {

// 4-subset oracle in table form: the 6 induced adjacency bits of a labeled
// 4-set index into a table marking exactly the paths (3 edges, degree
// multiset {1,1,2,2}). Built from first principles at startup.
const std::array<uint8_t, 64>& p4_code_table() {
  static const std::array<uint8_t, 64> table = [] {
    std::array<uint8_t, 64> t{};
    // bit order: ab, ac, ad, bc, bd, cd
    const int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int code = 0; code < 64; ++code) {
      int deg[4] = {0, 0, 0, 0};
      int edges = 0;
      for (int b = 0; b < 6; ++b)
        if ((code >> b) & 1) {
          ++edges;
          ++deg[ends[b][0]];
          ++deg[ends[b][1]];
        }
      int ones = 0, twos = 0;
      for (int d : deg) {
        ones += d == 1;
        twos += d == 2;
      }
      t[code] = edges == 3 && ones == 2 && twos == 2;
    }
    return t;
  }();
  return table;
}

// all-4-subset scan over byte adjacency rows, n <= 8
bool has_p4_rows8(const uint8_t* rows, int n) {
  const auto& table = p4_code_table();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      unsigned ab = (rows[a] >> b) & 1;
      for (int c = b + 1; c < n; ++c) {
        unsigned ac = (rows[a] >> c) & 1;
        unsigned bc = (rows[b] >> c) & 1;
        for (int d = c + 1; d < n; ++d) {
          unsigned code = ab | (ac << 1) | (((rows[a] >> d) & 1) << 2) | (bc << 3) |
                          (((rows[b] >> d) & 1) << 4) | (((rows[c] >> d) & 1) << 5);
          if (table[code]) return true;
        }
      }
    }
  return false;
}

}  // namespace

CheckResult check_cograph_exhaustive(int max_n, int jobs) {
  auto t0 = Clock::now();
  if (jobs < 1) jobs = 1;
  if (max_n > 8) max_n = 8;
  std::atomic<int64_t> mismatches{0};
  std::atomic<int64_t> total{0};

  for (int n = 1; n <= max_n; ++n) {
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const uint64_t count = uint64_t{1} << m;
    total += static_cast<int64_t>(count);

    // Gray-code order: one edge flip per step
    auto worker = [&](uint64_t lo, uint64_t hi) {
      graphs::Graph g(n);
      uint8_t rows[8] = {0, 0, 0, 0, 0, 0, 0, 0};
      uint64_t mask = lo ^ (lo >> 1);
      for (int b = 0; b < m; ++b)
        if ((mask >> b) & 1) {
          g.add_edge(pairs[b].first, pairs[b].second);
          rows[pairs[b].first] |= uint8_t(1u << pairs[b].second);
          rows[pairs[b].second] |= uint8_t(1u << pairs[b].first);
        }
      int64_t local_bad = 0;
      for (uint64_t i = lo;; ++i) {
        if (graphs::is_cograph(g) == has_p4_rows8(rows, n)) ++local_bad;
        if (i + 1 >= hi) break;
        int b = std::countr_zero(i + 1);
        auto [u, v] = pairs[b];
        g.toggle_edge(u, v);
        rows[u] ^= uint8_t(1u << v);
        rows[v] ^= uint8_t(1u << u);
      }
      if (local_bad) mismatches.fetch_add(local_bad);
    };

    int threads = static_cast<int>(std::min<uint64_t>(jobs, count));
    std::vector<std::thread> pool;
    uint64_t chunk = (count + threads - 1) / threads;
    for (int tix = 0; tix < threads; ++tix) {
      uint64_t lo = tix * chunk;
      uint64_t hi = std::min(count, lo + chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
    if (mismatches.load() != 0) break;
  }

  std::ostringstream detail;
  detail << total.load() << " graphs, " << mismatches.load() << " mismatches";
  return make_result("cograph recognition vs exhaustive 4-subset scan, n <= " +
                         std::to_string(max_n),
                     mismatches.load() == 0, detail.str(), t0);
}

CheckResult check_cograph_random(int count, int max_n, uint64_t seed) {
  auto t0 = Clock::now();
  std::mt19937 rng(static_cast<uint32_t>(seed));
  int bad = 0;
  for (int t = 0; t < count; ++t) {
    int n = 4 + static_cast<int>(rng() % (max_n - 3));
    graphs::Graph g = random_graph(rng, n, 0.15 + 0.2 * (t % 4));
    bool oracle = has_p4_by_subsets(g);
    if (graphs::is_cograph(g) != !oracle) ++bad;
    if (graphs::find_induced_p4(g).has_value() != oracle) ++bad;
  }
  return make_result("cograph recognition on " + std::to_string(count) + " random graphs",
                     bad == 0, std::to_string(bad) + " mismatches", t0);
}

CheckResult check_cograph_closure(uint64_t seed) {
  auto t0 = Clock::now();
  std::mt19937 rng(static_cast<uint32_t>(seed));
  int bad = 0;
  for (int t = 0; t < 60; ++t) {
    graphs::Graph a = random_cograph(rng, 32);
    graphs::Graph b = random_cograph(rng, 32);
    if (!graphs::is_cograph(a)) ++bad;
    if (!graphs::is_cograph(complement_of(a))) ++bad;
    if (!graphs::is_cograph(disjoint_union(a, b))) ++bad;
    if (!graphs::is_cograph(join_graphs(a, b))) ++bad;
  }
  return make_result("cograph closure under complement, union, join", bad == 0,
                     std::to_string(bad) + " violations", t0);
}

CheckResult check_twin_soundness(int64_t max_order) {
  auto t0 = Clock::now();
  int bad = 0, tested = 0;
  std::string first;
  for (const auto& e : zoo_manifest_fast()) {
    auto spec = zoo::parse(e.spec);
    if (zoo::advertised_order(spec) > max_order) continue;
    auto G = zoo::build(spec, max_order);
    graphs::Graph full = graphs::power_graph(*G, max_order);
    graphs::ReducedPowerGraph red = graphs::reduced_power_graph(*G);
    ++tested;
    if (graphs::is_cograph(full) != graphs::is_cograph(red.graph)) {
      ++bad;
      if (first.empty()) first = e.spec;
    }
  }
  return make_result("twin reduction preserves the verdict (orders <= " +
                         std::to_string(max_order) + ")",
                     bad == 0, std::to_string(tested) + " groups, " + std::to_string(bad) +
                         " mismatches " + first, t0);
}

CheckResult check_witness_agreement(int64_t max_order) {
  auto t0 = Clock::now();
  int bad = 0, tested = 0;
  for (const auto& e : zoo_manifest_fast()) {
    auto spec = zoo::parse(e.spec);
    if (zoo::advertised_order(spec) > max_order) continue;
    auto G = zoo::build(spec, max_order);
    graphs::ReducedPowerGraph red = graphs::reduced_power_graph(*G);
    bool cograph = graphs::is_cograph(red.graph);
    auto witness = graphs::find_induced_p4(red.graph);
    ++tested;
    if (witness.has_value() != !cograph) ++bad;
    if (witness) {
      std::array<int, 4> lifted = {red.rep[(*witness)[0]], red.rep[(*witness)[1]],
                                   red.rep[(*witness)[2]], red.rep[(*witness)[3]]};
      if (!classify::verify_p4_witness(*G, lifted)) ++bad;
    }
  }
  return make_result("witness search agrees with recognition on zoo power graphs", bad == 0,
                     std::to_string(tested) + " groups, " + std::to_string(bad) + " mismatches",
                     t0);
}

// ---------------------------------------------------------------------------
// number theory checks
// ---------------------------------------------------------------------------

CheckResult check_factorize_roundtrip(int64_t up_to) {
  auto t0 = Clock::now();
  int64_t bad = 0;
  for (int64_t n = 1; n <= up_to; ++n)
    if (numth::factorize(n).product() != n) ++bad;
  return make_result("factorization round-trip, n <= " + std::to_string(up_to), bad == 0,
                     std::to_string(bad) + " failures", t0);
}

namespace {

// naive divisor-counting classification, independent of factorize()
numth::OrderClass naive_order_class(int64_t n) {
  if (n == 1) return numth::OrderClass::ONE;
  int distinct = 0;
  bool squarefree = true;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ++distinct;
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e > 1) squarefree = false;
    }
  }
  if (n > 1) ++distinct;
  if (distinct == 1) return numth::OrderClass::PRIME_POWER;
  if (distinct == 2 && squarefree) return numth::OrderClass::TWO_DISTINCT_PRIMES;
  return numth::OrderClass::OTHER;
}

}  // namespace

CheckResult check_order_class_oracle(int64_t up_to) {
  auto t0 = Clock::now();
  int64_t bad = 0;
  for (int64_t n = 1; n <= up_to; ++n)
    if (numth::order_class(n) != naive_order_class(n)) ++bad;
  return make_result("order classification vs naive divisor oracle, n <= " +
                         std::to_string(up_to),
                     bad == 0, std::to_string(bad) + " mismatches", t0);
}

CheckResult check_scan_oracle(numth::Family family, int64_t q_max) {
  auto t0 = Clock::now();
  int bad = 0, rows = 0;
  for (const auto& row : numth::scan(family, q_max)) {
    ++rows;
    bool expect = true;
    for (const auto& part : row.parts)
      expect = expect && naive_order_class(part.value) != numth::OrderClass::OTHER;
    if (row.admissible != expect) ++bad;
  }
  return make_result(std::string("scan ") + numth::to_string(family) + " to " +
                         std::to_string(q_max) + " vs divisor oracle",
                     bad == 0, std::to_string(rows) + " rows, " + std::to_string(bad) +
                         " mismatches", t0);
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() { return {"zoo-fast", "zoo-full", "graphs", "numth"}; }

namespace {

std::vector<CheckResult> run_zoo(const std::vector<ZooEntry>& manifest,
                                 const classify::Config& cfg, int jobs) {
  std::vector<CheckResult> results(manifest.size());
  if (jobs < 1) jobs = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= manifest.size()) break;
      results[i] = check_zoo_entry(manifest[i], cfg);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& name, const classify::Config& cfg,
                                   int jobs) {
  if (name == "zoo-fast") {
    classify::Config fast = cfg;
    fast.max_order = std::min<int64_t>(fast.max_order, 2000);
    std::vector<ZooEntry> within;
    for (const auto& e : zoo_manifest_fast())
      if (zoo::advertised_order(zoo::parse(e.spec)) <= fast.max_order) within.push_back(e);
    return run_zoo(within, fast, jobs);
  }
  if (name == "zoo-full") {
    std::vector<ZooEntry> within;
    for (const auto& e : zoo_manifest_full())
      if (zoo::advertised_order(zoo::parse(e.spec)) <= cfg.max_order) within.push_back(e);
    return run_zoo(within, cfg, jobs);
  }
  if (name == "graphs") {
    return {check_cograph_exhaustive(8, jobs), check_cograph_random(1000, 12, 20240811),
            check_cograph_closure(99), check_twin_soundness(std::min<int64_t>(cfg.max_order, 5000)),
            check_witness_agreement(std::min<int64_t>(cfg.max_order, 2000))};
  }
  if (name == "numth") {
    return {check_factorize_roundtrip(1000000), check_order_class_oracle(100000),
            check_scan_oracle(numth::Family::PSL2_ODD, 100),
            check_scan_oracle(numth::Family::PSL2_EVEN, 1024),
            check_scan_oracle(numth::Family::SZ, 200)};
  }
  fail(Errc::InvalidParameters, "unknown suite '" + name + "'");
}

}  // namespace poco::suite
