#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poco/group.hpp"

namespace poco::graphs {

// Undirected simple graph over vertices 0..n-1 with bitset adjacency rows,
// so membership tests are O(1) and complement traversals work on words.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  int words() const { return w_; }
  int64_t edge_count() const { return edges_; }

  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  void toggle_edge(int i, int j);
  bool edge(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * w_ + (j >> 6)] >> (j & 63)) & 1;
  }
  const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * w_; }

  void clear_edges();  // keep n, drop all edges

  int degree(int i) const;
  std::vector<std::pair<int, int>> edges_sorted() const;

 private:
  int n_ = 0;
  int w_ = 0;
  int64_t edges_ = 0;
  std::vector<uint64_t> bits_;
};

// Cograph recognition by complement-component recursion: a graph on more
// than one vertex is a cograph iff each connected component is, and a
// connected graph is one iff its complement is disconnected with cograph
// pieces.
bool is_cograph(const Graph& g);

// Lexicographically least ordered 4-tuple (a,b,c,d) inducing a path with
// edges ab, bc, cd only; empty exactly when the graph is a cograph.
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g);

// deterministic DOT export; CapExceeded above max_vertices
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {},
                   int max_vertices = 2000);

// ---------------------------------------------------------------------------
// Group-facing constructions
// ---------------------------------------------------------------------------

// Power graph: vertices are the group elements, an edge joins two distinct
// elements when one is a power of the other. CapExceeded when |G| > cap.
Graph power_graph(const grp::Group& G, int64_t cap = 20000);

// Quotient of the power graph by the "same cyclic subgroup" twin classes:
// one vertex per distinct cyclic subgroup, adjacency by strict containment.
// Class sizes are Euler-phi of the generator order and sum to |G|.
struct ReducedPowerGraph {
  Graph graph{0};
  std::vector<int64_t> class_sizes;  // per vertex
  std::vector<int> rep;              // least-index generator per vertex
  std::vector<int> class_of;         // element index -> vertex
  std::vector<int64_t> rep_order;    // element order per vertex
};
ReducedPowerGraph reduced_power_graph(const grp::Group& G);

// Gruenberg-Kegel graph: vertices are primes dividing the group order,
// {p,q} is an edge iff some element order is divisible by pq.
struct PrimeGraph {
  std::vector<int64_t> primes;
  std::vector<std::pair<int64_t, int64_t>> edges;  // sorted pairs, p < q

  bool adjacent(int64_t p, int64_t q) const;
  int degree(int64_t p) const;
};
PrimeGraph prime_graph(const grp::Group& G);
PrimeGraph prime_graph_of_subgroup(const grp::Group& G, const grp::Subgroup& H);
PrimeGraph prime_graph_from_spectrum(int64_t group_order,
                                     const std::map<int64_t, int64_t>& spectrum);

enum class ShapeTag { NULL_GRAPH, SINGLE_EDGE, STAR_MIN_CENTER, SUBGRAPH_2K2, P3_PATH, OTHER };
const char* to_string(ShapeTag t);

// Primary tag picked by fixed precedence NULL_GRAPH > SINGLE_EDGE > P3_PATH
// > SUBGRAPH_2K2 > STAR_MIN_CENTER > OTHER; the other matches are listed as
// secondary. min_star_components holds iff every connected component is a
// star centered at its least prime.
struct ShapeClass {
  ShapeTag tag = ShapeTag::OTHER;
  std::optional<int64_t> center;
  std::vector<ShapeTag> secondary;
  bool min_star_components = false;
};
ShapeClass shape_class(const PrimeGraph& pg);

}  // namespace poco::graphs
