#include "poco/graphs.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "poco/detail/fnv.hpp"
#include "poco/numth.hpp"

namespace poco::graphs {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(int n) : n_(n), w_(n == 0 ? 1 : (n + 63) / 64) {
  bits_.assign(static_cast<size_t>(n_) * w_, 0);
}

void Graph::add_edge(int i, int j) {
  if (i == j) fail(Errc::InvalidParameters, "no loops in a simple graph");
  if (edge(i, j)) return;
  bits_[static_cast<size_t>(i) * w_ + (j >> 6)] |= uint64_t{1} << (j & 63);
  bits_[static_cast<size_t>(j) * w_ + (i >> 6)] |= uint64_t{1} << (i & 63);
  ++edges_;
}

void Graph::remove_edge(int i, int j) {
  if (!edge(i, j)) return;
  bits_[static_cast<size_t>(i) * w_ + (j >> 6)] &= ~(uint64_t{1} << (j & 63));
  bits_[static_cast<size_t>(j) * w_ + (i >> 6)] &= ~(uint64_t{1} << (i & 63));
  --edges_;
}

void Graph::toggle_edge(int i, int j) {
  if (edge(i, j)) remove_edge(i, j);
  else add_edge(i, j);
}

void Graph::clear_edges() {
  std::fill(bits_.begin(), bits_.end(), 0);
  edges_ = 0;
}

int Graph::degree(int i) const {
  int d = 0;
  for (int w = 0; w < w_; ++w) d += std::popcount(row(i)[w]);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges_sorted() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edges_));
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (edge(i, j)) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Cograph recognition
// ---------------------------------------------------------------------------

namespace {

// fast path for n <= 64: vertex subsets are single words; only the first n
// rows are ever read
struct Rows64 {
  int n = 0;
  std::array<uint64_t, 64> row;
};

uint64_t component64(const Rows64& g, uint64_t sub, int v, bool complement) {
  uint64_t comp = 0;
  uint64_t frontier = uint64_t{1} << v;
  while (frontier) {
    comp |= frontier;
    uint64_t next = 0;
    for (uint64_t f = frontier; f;) {
      int u = std::countr_zero(f);
      f &= f - 1;
      next |= complement ? ~(g.row[u] | (uint64_t{1} << u)) : g.row[u];
    }
    frontier = next & sub & ~comp;
  }
  return comp;
}

bool cograph64(const Rows64& g, uint64_t sub) {
  if (std::popcount(sub) <= 3) return true;
  int v0 = std::countr_zero(sub);
  uint64_t c0 = component64(g, sub, v0, false);
  if (c0 != sub) {
    for (uint64_t rest = sub; rest;) {
      uint64_t c = component64(g, rest, std::countr_zero(rest), false);
      if (!cograph64(g, c)) return false;
      rest &= ~c;
    }
    return true;
  }
  if (component64(g, sub, v0, true) == sub) return false;  // connected and co-connected
  for (uint64_t rest = sub; rest;) {
    uint64_t c = component64(g, rest, std::countr_zero(rest), true);
    if (!cograph64(g, c)) return false;
    rest &= ~c;
  }
  return true;
}

// general path: subsets as word vectors
using Mask = std::vector<uint64_t>;

int mask_count(const Mask& m) {
  int c = 0;
  for (uint64_t w : m) c += std::popcount(w);
  return c;
}

int mask_first(const Mask& m) {
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) return static_cast<int>(i * 64 + std::countr_zero(m[i]));
  return -1;
}

Mask component_dyn(const Graph& g, const Mask& sub, int v, bool complement) {
  const int W = g.words();
  Mask comp(W, 0), frontier(W, 0);
  frontier[v >> 6] = uint64_t{1} << (v & 63);
  while (true) {
    bool empty = true;
    for (int w = 0; w < W; ++w) {
      comp[w] |= frontier[w];
      if (frontier[w]) empty = false;
    }
    if (empty) break;
    Mask next(W, 0);
    for (int w = 0; w < W; ++w) {
      for (uint64_t f = frontier[w]; f;) {
        int u = w * 64 + std::countr_zero(f);
        f &= f - 1;
        const uint64_t* r = g.row(u);
        if (!complement) {
          for (int t = 0; t < W; ++t) next[t] |= r[t];
        } else {
          for (int t = 0; t < W; ++t) next[t] |= ~r[t];
          next[u >> 6] &= ~(uint64_t{1} << (u & 63));
        }
      }
    }
    for (int w = 0; w < W; ++w) frontier[w] = next[w] & sub[w] & ~comp[w];
  }
  return comp;
}

bool cograph_dyn(const Graph& g, const Mask& sub) {
  if (mask_count(sub) <= 3) return true;
  const int W = g.words();
  int v0 = mask_first(sub);
  Mask c0 = component_dyn(g, sub, v0, false);
  if (c0 != sub) {
    Mask rest = sub;
    while (mask_first(rest) >= 0) {
      Mask c = component_dyn(g, rest, mask_first(rest), false);
      if (!cograph_dyn(g, c)) return false;
      for (int w = 0; w < W; ++w) rest[w] &= ~c[w];
    }
    return true;
  }
  if (component_dyn(g, sub, v0, true) == sub) return false;
  Mask rest = sub;
  while (mask_first(rest) >= 0) {
    Mask c = component_dyn(g, rest, mask_first(rest), true);
    if (!cograph_dyn(g, c)) return false;
    for (int w = 0; w < W; ++w) rest[w] &= ~c[w];
  }
  return true;
}

}  // namespace

bool is_cograph(const Graph& g) {
  if (g.n() <= 3) return true;
  if (g.n() <= 64) {
    Rows64 r;
    r.n = g.n();
    for (int i = 0; i < g.n(); ++i) r.row[i] = g.row(i)[0];
    uint64_t all = g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1;
    return cograph64(r, all);
  }
  Mask all(g.words(), 0);
  for (int i = 0; i < g.n(); ++i) all[i >> 6] |= uint64_t{1} << (i & 63);
  return cograph_dyn(g, all);
}

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a || !g.edge(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || !g.edge(b, c) || g.edge(a, c)) continue;
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (g.edge(c, d) && !g.edge(b, d) && !g.edge(a, d))
            return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, int max_vertices) {
  if (g.n() > max_vertices)
    fail(Errc::CapExceeded, "DOT export limited to " + std::to_string(max_vertices) + " vertices");
  std::ostringstream os;
  os << "graph g {\n";
  for (int i = 0; i < g.n(); ++i) {
    os << "  v" << i;
    if (static_cast<size_t>(i) < labels.size()) os << " [label=\"" << labels[i] << "\"]";
    os << ";\n";
  }
  for (auto [i, j] : g.edges_sorted()) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Group-facing constructions
// ---------------------------------------------------------------------------

Graph power_graph(const grp::Group& G, int64_t cap) {
  if (G.order64() > cap)
    fail(Errc::CapExceeded,
         "power graph on " + std::to_string(G.order64()) + " vertices exceeds cap");
  Graph g(G.order());
  for (int i = 1; i < G.order(); ++i) {
    int x = G.mul(0, i);
    while (x != 0) {
      if (x != i) g.add_edge(i, x);
      x = G.mul(x, i);
    }
    g.add_edge(i, 0);  // the identity is a power of everything
  }
  return g;
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    detail::Fnv h;
    for (int x : v) h.u32(static_cast<uint32_t>(x));
    return static_cast<size_t>(h.h);
  }
};

}  // namespace

ReducedPowerGraph reduced_power_graph(const grp::Group& G) {
  const int n = G.order();
  ReducedPowerGraph out;
  out.class_of.assign(n, -1);

  std::unordered_map<std::vector<int>, int, VecHash> classes;
  std::vector<std::vector<int>> members_of;  // the cyclic subgroup behind each vertex
  for (int i = 0; i < n; ++i) {
    std::vector<int> cyc = G.cyclic_subgroup(i);
    auto [it, inserted] = classes.emplace(std::move(cyc), static_cast<int>(members_of.size()));
    if (inserted) {
      members_of.push_back(it->first);
      out.rep.push_back(i);
      out.rep_order.push_back(G.order_of(i));
      out.class_sizes.push_back(0);
    }
    out.class_of[i] = it->second;
    out.class_sizes[it->second] += 1;
  }

  const int m = static_cast<int>(members_of.size());
  out.graph = Graph(m);
  for (int c = 0; c < m; ++c)
    for (int y : members_of[c]) {
      int cy = out.class_of[y];
      if (cy != c) out.graph.add_edge(c, cy);  // <y> sits strictly inside the class-c subgroup
    }
  return out;
}

bool PrimeGraph::adjacent(int64_t p, int64_t q) const {
  if (p > q) std::swap(p, q);
  return std::find(edges.begin(), edges.end(), std::make_pair(p, q)) != edges.end();
}

int PrimeGraph::degree(int64_t p) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a == p || b == p) ++d;
  return d;
}

PrimeGraph prime_graph_from_spectrum(int64_t group_order,
                                     const std::map<int64_t, int64_t>& spectrum) {
  PrimeGraph pg;
  for (auto [p, e] : numth::factorize(group_order).factors) {
    (void)e;
    pg.primes.push_back(p);
  }
  std::vector<std::pair<int64_t, int64_t>> edges;
  for (auto [order, count] : spectrum) {
    (void)count;
    auto f = numth::factorize(order);
    for (size_t i = 0; i < f.factors.size(); ++i)
      for (size_t j = i + 1; j < f.factors.size(); ++j)
        edges.emplace_back(f.factors[i].first, f.factors[j].first);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  pg.edges = std::move(edges);
  return pg;
}

PrimeGraph prime_graph(const grp::Group& G) {
  return prime_graph_from_spectrum(G.order64(), grp::order_spectrum(G));
}

PrimeGraph prime_graph_of_subgroup(const grp::Group& G, const grp::Subgroup& H) {
  return prime_graph_from_spectrum(H.order(), grp::order_spectrum_of(G, H));
}

const char* to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::NULL_GRAPH: return "NULL_GRAPH";
    case ShapeTag::SINGLE_EDGE: return "SINGLE_EDGE";
    case ShapeTag::STAR_MIN_CENTER: return "STAR_MIN_CENTER";
    case ShapeTag::SUBGRAPH_2K2: return "SUBGRAPH_2K2";
    case ShapeTag::P3_PATH: return "P3_PATH";
    case ShapeTag::OTHER: return "OTHER";
  }
  return "?";
}

ShapeClass shape_class(const PrimeGraph& pg) {
  const int n = static_cast<int>(pg.primes.size());
  const int m = static_cast<int>(pg.edges.size());

  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (comp[u] == -1 && pg.adjacent(pg.primes[v], pg.primes[u])) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  auto comp_of_prime = [&](int64_t p) {
    return comp[std::find(pg.primes.begin(), pg.primes.end(), p) - pg.primes.begin()];
  };

  bool all_min_stars = true;
  std::vector<int64_t> star_centers;  // centers of components with >= 2 vertices
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int64_t> verts;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) verts.push_back(pg.primes[v]);
    if (verts.size() == 1) continue;
    int64_t least = *std::min_element(verts.begin(), verts.end());
    int edges_in = 0;
    for (auto [a, b] : pg.edges) {
      (void)b;
      if (comp_of_prime(a) == c) ++edges_in;
    }
    bool star = edges_in == static_cast<int>(verts.size()) - 1 &&
                pg.degree(least) == static_cast<int>(verts.size()) - 1;
    if (!star) all_min_stars = false;
    else star_centers.push_back(least);
  }

  ShapeClass sc;
  sc.min_star_components = all_min_stars;

  std::vector<ShapeTag> matches;
  if (m == 0) matches.push_back(ShapeTag::NULL_GRAPH);
  if (n == 2 && m == 1) matches.push_back(ShapeTag::SINGLE_EDGE);

  std::optional<int64_t> p3_center;
  if (n == 3 && m == 2) {
    for (int64_t p : pg.primes)
      if (pg.degree(p) == 2) p3_center = p;
    if (p3_center) matches.push_back(ShapeTag::P3_PATH);
  }

  // induced subgraph of two disjoint edges: a matching of size <= 2 plus a
  // limited number of isolated vertices
  {
    bool matching = true;
    for (size_t i = 0; i < pg.edges.size() && matching; ++i)
      for (size_t j = i + 1; j < pg.edges.size(); ++j) {
        auto [a, b] = pg.edges[i];
        auto [c, d] = pg.edges[j];
        if (a == c || a == d || b == c || b == d) {
          matching = false;
          break;
        }
      }
    int isolated = 0;
    for (int64_t p : pg.primes)
      if (pg.degree(p) == 0) ++isolated;
    bool ok = matching && ((m == 0 && isolated <= 2) || (m == 1 && isolated <= 1) ||
                           (m == 2 && isolated == 0));
    if (ok) matches.push_back(ShapeTag::SUBGRAPH_2K2);
  }

  if (all_min_stars) matches.push_back(ShapeTag::STAR_MIN_CENTER);

  static const ShapeTag precedence[] = {ShapeTag::NULL_GRAPH, ShapeTag::SINGLE_EDGE,
                                        ShapeTag::P3_PATH, ShapeTag::SUBGRAPH_2K2,
                                        ShapeTag::STAR_MIN_CENTER};
  sc.tag = ShapeTag::OTHER;
  for (ShapeTag t : precedence) {
    if (std::find(matches.begin(), matches.end(), t) != matches.end()) {
      sc.tag = t;
      break;
    }
  }
  for (ShapeTag t : matches)
    if (t != sc.tag) sc.secondary.push_back(t);

  if (sc.tag == ShapeTag::P3_PATH) sc.center = p3_center;
  else if (sc.tag == ShapeTag::SINGLE_EDGE)
    sc.center = std::min(pg.edges[0].first, pg.edges[0].second);
  else if (sc.tag == ShapeTag::STAR_MIN_CENTER && star_centers.size() == 1)
    sc.center = star_centers[0];

  return sc;
}

}  // namespace poco::graphs
