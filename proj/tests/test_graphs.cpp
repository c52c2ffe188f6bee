#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "poco/graphs.hpp"
#include "poco/group.hpp"
#include "poco/numth.hpp"

using namespace poco::graphs;
using poco::grp::Group;
using poco::grp::GroupPtr;
using poco::grp::Perm;

namespace {

Perm cycle(int n, const std::vector<int>& c) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  for (size_t i = 0; i < c.size(); ++i) p.img[c[i]] = static_cast<uint16_t>(c[(i + 1) % c.size()]);
  return p;
}

GroupPtr cyclic(int n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 0);
  return Group::generate({cycle(n, c)}, 100000);
}

GroupPtr sym(int n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 0);
  return Group::generate({cycle(n, {0, 1}), cycle(n, c)}, 100000);
}

GroupPtr alt5() {
  return Group::generate({cycle(5, {0, 1, 2}), cycle(5, {0, 1, 2, 3, 4})}, 100000);
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complement_of(const Graph& g) {
  Graph c(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.edge(i, j)) c.add_edge(i, j);
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [i, j] : a.edges_sorted()) g.add_edge(i, j);
  for (auto [i, j] : b.edges_sorted()) g.add_edge(a.n() + i, a.n() + j);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < b.n(); ++j) g.add_edge(i, a.n() + j);
  return g;
}

// random cograph from a random construction tree
Graph random_cograph(std::mt19937& rng, int budget) {
  if (budget <= 1 || rng() % 3 == 0) return Graph(1);
  int left = 1 + static_cast<int>(rng() % (budget - 1));
  Graph a = random_cograph(rng, left);
  Graph b = random_cograph(rng, budget - left);
  return rng() % 2 ? disjoint_union(a, b) : join(a, b);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// independent oracle: a graph has an induced P4 iff some 4-subset induces
// exactly 3 edges with degree multiset {1,1,2,2}
bool has_p4_by_subsets(const Graph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c)
        for (int d = c + 1; d < g.n(); ++d) {
          int v[4] = {a, b, c, d};
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
          std::multiset<int> ms(deg, deg + 4);
          if (ms == std::multiset<int>{1, 1, 2, 2}) return true;
        }
  return false;
}

}  // namespace

TEST_CASE("power graph shapes") {
  // prime cyclic group: a clique
  Graph k5 = power_graph(*cyclic(5));
  CHECK(k5.edge_count() == 10);

  // S3: identity joined to everything, the two 3-cycles joined to each other
  Graph s3 = power_graph(*sym(3));
  CHECK(s3.n() == 6);
  CHECK(s3.edge_count() == 6);
  for (int i = 1; i < 6; ++i) CHECK(s3.edge(0, i));  // identity dominates

  // C6: complete minus the (order-2, order-3) pairs
  Graph c6 = power_graph(*cyclic(6));
  CHECK(c6.edge_count() == 13);

  CHECK_THROWS_AS(power_graph(*sym(5), 100), poco::Error);
}

TEST_CASE("reduced power graph collapses generator classes") {
  ReducedPowerGraph r5 = reduced_power_graph(*cyclic(5));
  CHECK(r5.graph.n() == 2);
  CHECK(r5.graph.edge_count() == 1);
  CHECK(r5.class_sizes[0] == 1);
  CHECK(r5.class_sizes[1] == 4);

  ReducedPowerGraph r3 = reduced_power_graph(*sym(3));
  CHECK(r3.graph.n() == 5);  // trivial, three C2, one C3
  CHECK(r3.graph.edge_count() == 4);

  // class sizes are phi(order) and partition the group
  for (const auto& G : {cyclic(12), sym(4)}) {
    ReducedPowerGraph r = reduced_power_graph(*G);
    int64_t total = 0;
    for (int v = 0; v < r.graph.n(); ++v) {
      CHECK(r.class_sizes[v] == poco::numth::euler_phi(r.rep_order[v]));
      total += r.class_sizes[v];
    }
    CHECK(total == G->order64());
  }
}

TEST_CASE("cograph recognition basics") {
  CHECK(!is_cograph(path(4)));
  CHECK(is_cograph(complete(7)));
  CHECK(is_cograph(Graph(0)));
  CHECK(is_cograph(Graph(1)));

  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  CHECK(is_cograph(c4));

  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(!is_cograph(c5));
}

TEST_CASE("induced P4 extraction") {
  auto w = find_induced_p4(path(4));
  REQUIRE(w.has_value());
  CHECK(*w == std::array<int, 4>{0, 1, 2, 3});

  CHECK(!find_induced_p4(complete(4)).has_value());

  // a graph with a later P4: witness is lexicographically least
  Graph g(6);
  g.add_edge(0, 1);  // isolated edge
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  auto w2 = find_induced_p4(g);
  REQUIRE(w2.has_value());
  CHECK(*w2 == std::array<int, 4>{2, 3, 4, 5});
}

TEST_CASE("recognition agrees with the 4-subset oracle on random graphs") {
  std::mt19937 rng(20240811);
  for (int t = 0; t < 400; ++t) {
    int n = 4 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 0.2 + 0.2 * (t % 4));
    bool brute_p4 = has_p4_by_subsets(g);
    CHECK(is_cograph(g) == !brute_p4);
    CHECK(find_induced_p4(g).has_value() == brute_p4);
  }
}

TEST_CASE("the dynamic path agrees with the small path") {
  // same construction above and below the 64-vertex word boundary
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    Graph small = random_cograph(rng, 40);
    CHECK(is_cograph(small));
    Graph big = disjoint_union(small, small);
    while (big.n() <= 64) big = disjoint_union(big, small);
    CHECK(is_cograph(big));
    // appending one P4 breaks it
    Graph broken(big.n() + 4);
    for (auto [i, j] : big.edges_sorted()) broken.add_edge(i, j);
    for (int i = 0; i < 3; ++i) broken.add_edge(big.n() + i, big.n() + i + 1);
    CHECK(!is_cograph(broken));
    CHECK(find_induced_p4(broken).has_value());
  }
}

TEST_CASE("cograph class closure under complement, union, join") {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    Graph a = random_cograph(rng, 24);
    Graph b = random_cograph(rng, 24);
    CHECK(is_cograph(a));
    CHECK(is_cograph(complement_of(a)));
    CHECK(is_cograph(disjoint_union(a, b)));
    CHECK(is_cograph(join(a, b)));
  }
  CHECK(!is_cograph(complement_of(path(4))));  // complement of P4 is P4
}

TEST_CASE("twin reduction preserves the cograph property both ways") {
  for (const auto& G : {cyclic(6), cyclic(12), cyclic(30), sym(3), sym(4), sym(5), alt5()}) {
    Graph full = power_graph(*G);
    ReducedPowerGraph red = reduced_power_graph(*G);
    CHECK(is_cograph(full) == is_cograph(red.graph));
  }
}

TEST_CASE("prime graphs") {
  PrimeGraph c6 = prime_graph(*cyclic(6));
  CHECK(c6.primes == std::vector<int64_t>{2, 3});
  CHECK(c6.edges.size() == 1);
  CHECK(c6.adjacent(2, 3));

  PrimeGraph s3 = prime_graph(*sym(3));
  CHECK(s3.primes == std::vector<int64_t>{2, 3});
  CHECK(s3.edges.empty());

  PrimeGraph a5 = prime_graph(*alt5());
  CHECK(a5.primes == std::vector<int64_t>{2, 3, 5});
  CHECK(a5.edges.empty());
}

TEST_CASE("subgroup prime graphs embed in the parent's") {
  auto s4 = sym(4);
  for (int64_t p : {2, 3}) {
    auto syl = poco::grp::sylow_subgroup(*s4, p);
    PrimeGraph sub = prime_graph_of_subgroup(*s4, syl);
    PrimeGraph parent = prime_graph(*s4);
    for (int64_t q : sub.primes)
      CHECK(std::find(parent.primes.begin(), parent.primes.end(), q) != parent.primes.end());
    for (auto [a, b] : sub.edges) CHECK(parent.adjacent(a, b));
  }
}

TEST_CASE("shape classification follows the documented precedence") {
  // empty graph on two primes
  PrimeGraph pg;
  pg.primes = {2, 3};
  ShapeClass s = shape_class(pg);
  CHECK(s.tag == ShapeTag::NULL_GRAPH);
  CHECK(std::find(s.secondary.begin(), s.secondary.end(), ShapeTag::SUBGRAPH_2K2) !=
        s.secondary.end());

  // single edge
  pg.primes = {2, 5};
  pg.edges = {{2, 5}};
  s = shape_class(pg);
  CHECK(s.tag == ShapeTag::SINGLE_EDGE);
  CHECK(s.center == 2);

  // edge {2,5} plus isolated 3: fits inside two disjoint edges, star-valid
  pg.primes = {2, 3, 5};
  pg.edges = {{2, 5}};
  s = shape_class(pg);
  CHECK(s.tag == ShapeTag::SUBGRAPH_2K2);
  CHECK(std::find(s.secondary.begin(), s.secondary.end(), ShapeTag::STAR_MIN_CENTER) !=
        s.secondary.end());
  CHECK(s.min_star_components);

  // path 3-2-5 centered at 2
  pg.primes = {2, 3, 5};
  pg.edges = {{2, 3}, {2, 5}};
  s = shape_class(pg);
  CHECK(s.tag == ShapeTag::P3_PATH);
  CHECK(s.center == 2);
  CHECK(s.min_star_components);

  // two disjoint edges
  pg.primes = {2, 3, 7, 13};
  pg.edges = {{2, 3}, {7, 13}};
  s = shape_class(pg);
  CHECK(s.tag == ShapeTag::SUBGRAPH_2K2);
  CHECK(s.min_star_components);

  // star on 4 vertices centered at the least prime: not inside 2K2
  pg.primes = {2, 3, 5, 7};
  pg.edges = {{2, 3}, {2, 5}, {2, 7}};
  s = shape_class(pg);
  CHECK(s.tag == ShapeTag::STAR_MIN_CENTER);
  CHECK(s.center == 2);

  // star centered at the wrong prime
  pg.primes = {2, 3, 5};
  pg.edges = {{2, 3}, {3, 5}};
  s = shape_class(pg);
  CHECK(s.tag == ShapeTag::P3_PATH);  // still a path, but centered at 3
  CHECK(s.center == 3);
  CHECK(!s.min_star_components);

  // triangle
  pg.primes = {2, 3, 5};
  pg.edges = {{2, 3}, {2, 5}, {3, 5}};
  s = shape_class(pg);
  CHECK(s.tag == ShapeTag::OTHER);
}

TEST_CASE("DOT export is deterministic and capped") {
  Graph g = path(3);
  std::string dot = to_dot(g, {"a", "b", "c"});
  CHECK(dot == to_dot(g, {"a", "b", "c"}));
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK_THROWS_AS(to_dot(complete(10), {}, 5), poco::Error);
}
