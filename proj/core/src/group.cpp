#include "poco/group.hpp"

#include <algorithm>
#include <numeric>

#include "poco/detail/fnv.hpp"
#include "poco/numth.hpp"

namespace poco::grp {

// ---------------------------------------------------------------------------
// Element operations
// ---------------------------------------------------------------------------

namespace {

void check_mat_domains(const Mat& a, const Mat& b) {
  if (a.f != b.f) fail(Errc::MixedFields, "matrix entries from different fields");
  if (a.dim != b.dim) fail(Errc::MixedBackends, "matrix dimensions differ");
}

uint32_t det_rec(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const ff::Field* f = m.f;
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  int64_t acc = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < cols.size(); ++j) {
    uint32_t pivot = m.at(rows[0], cols[j]);
    if (pivot == 0) continue;
    std::vector<int> sub_cols;
    for (size_t t = 0; t < cols.size(); ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    int64_t term = f->mul(pivot, det_rec(m, sub_rows, sub_cols));
    acc = (j % 2 == 0) ? f->add(acc, term) : f->sub(acc, term);
  }
  return static_cast<uint32_t>(acc);
}

}  // namespace

Mat mat_identity(const ff::Field* f, int dim) {
  Mat m;
  m.f = f;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  check_mat_domains(a, b);
  const ff::Field* f = a.f;
  Mat r;
  r.f = f;
  r.dim = a.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      int64_t acc = 0;
      for (int k = 0; k < a.dim; ++k) acc = f->add(acc, f->mul(a.at(i, k), b.at(k, j)));
      r.set(i, j, static_cast<uint32_t>(acc));
    }
  return r;
}

bool mat_invertible(const Mat& m) {
  std::vector<int> idx(m.dim);
  std::iota(idx.begin(), idx.end(), 0);
  return det_rec(m, idx, idx) != 0;
}

Element mul(const Element& a, const Element& b) {
  if (a.index() != b.index()) fail(Errc::MixedBackends, "mixed element kinds");
  if (const auto* pa = std::get_if<Perm>(&a)) {
    const auto& pb = std::get<Perm>(b);
    if (pa->img.size() != pb.img.size()) fail(Errc::MixedBackends, "permutation degrees differ");
    Perm r;
    r.img.resize(pa->img.size());
    for (size_t x = 0; x < pa->img.size(); ++x) r.img[x] = pb.img[pa->img[x]];
    return r;
  }
  if (const auto* ma = std::get_if<Mat>(&a)) return mat_mul(*ma, std::get<Mat>(b));
  const auto& xa = std::get<Aff>(a);
  const auto& xb = std::get<Aff>(b);
  check_mat_domains(xa.a, xb.a);
  const ff::Field* f = xa.a.f;
  Aff r;
  r.a = mat_mul(xa.a, xb.a);
  for (int i = 0; i < xa.a.dim; ++i) {
    int64_t acc = xa.v[i];
    for (int j = 0; j < xa.a.dim; ++j) acc = f->add(acc, f->mul(xa.a.at(i, j), xb.v[j]));
    r.v[i] = static_cast<uint32_t>(acc);
  }
  return r;
}

Element identity_like(const Element& sample) {
  if (const auto* p = std::get_if<Perm>(&sample)) {
    Perm r;
    r.img.resize(p->img.size());
    std::iota(r.img.begin(), r.img.end(), 0);
    return r;
  }
  if (const auto* m = std::get_if<Mat>(&sample)) return mat_identity(m->f, m->dim);
  const auto& x = std::get<Aff>(sample);
  Aff r;
  r.a = mat_identity(x.a.f, x.a.dim);
  return r;
}

bool is_identity(const Element& e) { return e == identity_like(e); }

size_t ElementHash::operator()(const Element& e) const {
  detail::Fnv h;
  h.byte(static_cast<uint8_t>(e.index()));
  if (const auto* p = std::get_if<Perm>(&e)) {
    for (uint16_t v : p->img) h.u16(v);
  } else if (const auto* m = std::get_if<Mat>(&e)) {
    h.u64(static_cast<uint64_t>(m->f->p()));
    h.byte(static_cast<uint8_t>(m->f->k()));
    h.byte(static_cast<uint8_t>(m->dim));
    for (int i = 0; i < m->dim * m->dim; ++i) h.u32(m->e[i]);
  } else {
    const auto& x = std::get<Aff>(e);
    h.u64(static_cast<uint64_t>(x.a.f->p()));
    h.byte(static_cast<uint8_t>(x.a.f->k()));
    h.byte(static_cast<uint8_t>(x.a.dim));
    for (int i = 0; i < x.a.dim * x.a.dim; ++i) h.u32(x.a.e[i]);
    for (int i = 0; i < x.a.dim; ++i) h.u32(x.v[i]);
  }
  return static_cast<size_t>(h.h);
}

// ---------------------------------------------------------------------------
// Group construction
// ---------------------------------------------------------------------------

namespace {

void validate_generator(const Element& e) {
  if (const auto* p = std::get_if<Perm>(&e)) {
    if (p->img.empty()) fail(Errc::InvalidParameters, "empty permutation");
    std::vector<uint8_t> seen(p->img.size(), 0);
    for (uint16_t v : p->img) {
      if (v >= p->img.size() || seen[v])
        fail(Errc::InvalidParameters, "permutation is not a bijection");
      seen[v] = 1;
    }
  } else if (const auto* m = std::get_if<Mat>(&e)) {
    if (m->dim < 1 || m->dim > 4) fail(Errc::InvalidParameters, "matrix dimension out of range");
    if (!mat_invertible(*m)) fail(Errc::InvalidParameters, "matrix generator is singular");
  } else {
    const auto& x = std::get<Aff>(e);
    if (x.a.dim < 1 || x.a.dim > 4) fail(Errc::InvalidParameters, "matrix dimension out of range");
    if (!mat_invertible(x.a)) fail(Errc::InvalidParameters, "affine generator has singular matrix part");
  }
}

void check_same_domain(const Element& a, const Element& b) {
  if (a.index() != b.index()) fail(Errc::MixedBackends, "generators use different backends");
  if (const auto* pa = std::get_if<Perm>(&a)) {
    if (pa->img.size() != std::get<Perm>(b).img.size())
      fail(Errc::MixedBackends, "permutation generators act on different point counts");
  } else if (const auto* ma = std::get_if<Mat>(&a)) {
    const auto& mb = std::get<Mat>(b);
    if (ma->f != mb.f || ma->dim != mb.dim)
      fail(Errc::MixedBackends, "matrix generators disagree on field or dimension");
  } else {
    const auto& xa = std::get<Aff>(a);
    const auto& xb = std::get<Aff>(b);
    if (xa.a.f != xb.a.f || xa.a.dim != xb.a.dim)
      fail(Errc::MixedBackends, "affine generators disagree on field or dimension");
  }
}

}  // namespace

GroupPtr Group::generate(const std::vector<Element>& gens, int64_t cap) {
  if (gens.empty()) fail(Errc::InvalidParameters, "no generators");
  if (cap < 1) fail(Errc::InvalidParameters, "cap must be positive");
  for (const auto& g : gens) {
    validate_generator(g);
    check_same_domain(gens[0], g);
  }

  auto group = std::shared_ptr<Group>(new Group());
  auto& data = group->data_.emplace<Concrete>();
  Element id = identity_like(gens[0]);
  data.elems.push_back(id);
  data.index.emplace(id, 0);

  for (size_t at = 0; at < data.elems.size(); ++at) {
    for (const auto& g : gens) {
      Element e = grp::mul(data.elems[at], g);
      auto [it, inserted] = data.index.emplace(std::move(e), static_cast<int>(data.elems.size()));
      if (inserted) {
        data.elems.push_back(it->first);
        if (static_cast<int64_t>(data.elems.size()) > cap)
          fail(Errc::CapExceeded, "group closure exceeds cap " + std::to_string(cap));
      }
    }
  }

  group->n_ = static_cast<int64_t>(data.elems.size());
  for (const auto& g : gens) {
    int idx = data.index.at(g);
    if (idx != 0 && std::find(group->gens_.begin(), group->gens_.end(), idx) == group->gens_.end())
      group->gens_.push_back(idx);
  }
  group->finish();
  return group;
}

GroupPtr Group::from_cosets(GroupPtr parent, std::vector<int> reps, std::vector<int> coset_of,
                            std::vector<int> gen_cosets) {
  auto group = std::shared_ptr<Group>(new Group());
  auto& data = group->data_.emplace<Cosets>();
  data.parent = std::move(parent);
  data.reps = std::move(reps);
  data.coset_of = std::move(coset_of);
  group->n_ = static_cast<int64_t>(data.reps.size());
  group->gens_ = std::move(gen_cosets);
  group->finish();
  return group;
}

void Group::finish() {
  ord_.assign(n_, 0);
  inv_.assign(n_, 0);
  ord_[0] = 1;
  for (int i = 1; i < n_; ++i) {
    // walk i, i^2, ... until the identity; the step before it is i^-1
    int ord = 1;
    int x = i, prev = i;
    while (x != 0) {
      prev = x;
      x = mul(x, i);
      ++ord;
    }
    ord_[i] = ord;
    inv_[i] = prev;
  }
}

int Group::mul(int i, int j) const {
  if (const auto* c = std::get_if<Concrete>(&data_)) {
    auto it = c->index.find(grp::mul(c->elems[i], c->elems[j]));
    return it->second;
  }
  const auto& q = std::get<Cosets>(data_);
  return q.coset_of[q.parent->mul(q.reps[i], q.reps[j])];
}

int Group::pow(int i, int64_t e) const {
  if (e < 0) return pow(inv_[i], -e);
  int r = 0;
  int base = i;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Group::is_quotient() const { return std::holds_alternative<Cosets>(data_); }

const GroupPtr& Group::parent() const { return std::get<Cosets>(data_).parent; }

int Group::rep_of(int coset) const { return std::get<Cosets>(data_).reps[coset]; }

int Group::coset_of(int parent_index) const {
  return std::get<Cosets>(data_).coset_of[parent_index];
}

const Element& Group::element(int i) const { return std::get<Concrete>(data_).elems[i]; }

std::vector<int> Group::cyclic_subgroup(int i) const {
  std::vector<int> out;
  int x = 0;
  do {
    out.push_back(x);
    x = mul(x, i);
  } while (x != 0);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t Group::element_list_hash() const {
  detail::Fnv h;
  if (const auto* c = std::get_if<Concrete>(&data_)) {
    ElementHash eh;
    for (const auto& e : c->elems) h.u64(eh(e));
  } else {
    const auto& q = std::get<Cosets>(data_);
    h.u64(q.parent->element_list_hash());
    for (int r : q.reps) h.u32(static_cast<uint32_t>(r));
  }
  return h.h;
}

// ---------------------------------------------------------------------------
// Subgroup algorithms
// ---------------------------------------------------------------------------

bool Subgroup::subset_of(const Subgroup& other) const {
  for (int x : elems)
    if (!other.contains(x)) return false;
  return true;
}

Subgroup whole_group(const Group& G) {
  Subgroup H;
  H.g = &G;
  H.elems.resize(G.order());
  std::iota(H.elems.begin(), H.elems.end(), 0);
  H.gens = G.generator_indices();
  H.mask.assign(G.order(), 1);
  return H;
}

Subgroup trivial_subgroup(const Group& G) {
  Subgroup H;
  H.g = &G;
  H.elems = {0};
  H.mask.assign(G.order(), 0);
  H.mask[0] = 1;
  return H;
}

Subgroup closure(const Group& G, std::vector<int> seeds) {
  std::vector<int> gens;
  for (int s : seeds)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);

  Subgroup H;
  H.g = &G;
  H.mask.assign(G.order(), 0);
  H.mask[0] = 1;
  std::vector<int> work = {0};
  for (size_t at = 0; at < work.size(); ++at) {
    for (int s : gens) {
      int y = G.mul(work[at], s);
      if (!H.mask[y]) {
        H.mask[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::sort(work.begin(), work.end());
  H.elems = std::move(work);
  H.gens = std::move(gens);
  return H;
}

Subgroup subgroup_from_members(const Group& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<int> gens;
  Subgroup H = trivial_subgroup(G);
  for (int x : members) {
    if (!H.contains(x)) {
      gens.push_back(x);
      H = closure(G, gens);
    }
  }
  if (H.elems != members)
    fail(Errc::InvariantViolated, "member list is not closed under multiplication");
  return H;
}

int element_order(const Group& G, int i) {
  if (i < 0 || i >= G.order()) fail(Errc::ElementNotInGroup, "index " + std::to_string(i));
  return G.order_of(i);
}

Subgroup centralizer_in(const Group& G, const std::vector<int>& domain, int i) {
  if (i < 0 || i >= G.order()) fail(Errc::ElementNotInGroup, "index " + std::to_string(i));
  std::vector<int> members;
  for (int j : domain)
    if (G.mul(j, i) == G.mul(i, j)) members.push_back(j);
  return subgroup_from_members(G, std::move(members));
}

Subgroup centralizer(const Group& G, int i) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return centralizer_in(G, all, i);
}

Subgroup center(const Group& G) {
  std::vector<int> members;
  for (int j = 0; j < G.order(); ++j) {
    bool central = true;
    for (int g : G.generator_indices())
      if (G.mul(j, g) != G.mul(g, j)) {
        central = false;
        break;
      }
    if (central) members.push_back(j);
  }
  return subgroup_from_members(G, std::move(members));
}

namespace {

// least subgroup containing the seeds and closed under conjugation by all of
// <conj_gens>
Subgroup normal_closure_under(const Group& G, const std::vector<int>& conj_gens,
                              std::vector<int> seeds) {
  std::vector<uint8_t> in_work(G.order(), 0);
  std::vector<int> W;
  auto push = [&](int x) {
    if (x != 0 && !in_work[x]) {
      in_work[x] = 1;
      W.push_back(x);
    }
  };
  for (int s : seeds) push(s);
  Subgroup H = closure(G, W);
  bool changed = true;
  while (changed) {
    changed = false;
    size_t sweep = W.size();
    for (size_t wi = 0; wi < sweep; ++wi) {
      for (int g : conj_gens) {
        int c = G.conj(g, W[wi]);
        if (!H.contains(c) && !in_work[c]) {
          push(c);
          changed = true;
        }
      }
    }
    if (changed) H = closure(G, W);
  }
  return H;
}

}  // namespace

Subgroup normal_closure(const Group& G, const std::vector<int>& seeds) {
  return normal_closure_under(G, G.generator_indices(), seeds);
}

bool is_normal(const Group& G, const Subgroup& H) {
  for (int g : G.generator_indices())
    for (int s : H.gens)
      if (!H.contains(G.conj(g, s))) return false;
  return true;
}

std::vector<Subgroup> derived_series(const Group& G) {
  std::vector<Subgroup> series;
  series.push_back(whole_group(G));
  while (true) {
    const Subgroup& cur = series.back();
    std::vector<int> comms;
    for (int a : cur.gens)
      for (int b : cur.gens) {
        int c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
        if (c != 0) comms.push_back(c);
      }
    Subgroup next = normal_closure_under(G, cur.gens, comms);
    if (next.order() == cur.order()) break;
    bool done = next.order() == 1;
    series.push_back(std::move(next));
    if (done) break;
  }
  return series;
}

bool is_solvable(const Group& G) { return derived_series(G).back().order() == 1; }

bool is_abelian(const Group& G) {
  for (int a : G.generator_indices())
    for (int b : G.generator_indices())
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

bool is_abelian_subgroup(const Group& G, const Subgroup& H) {
  for (int a : H.gens)
    for (int b : H.gens)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const Group& G) {
  for (int i = 0; i < G.order(); ++i)
    if (G.order_of(i) == G.order()) return true;
  return false;
}

namespace {

int64_t p_part(int64_t n, int64_t p) {
  int64_t r = 1;
  while (n % p == 0) {
    r *= p;
    n /= p;
  }
  return r;
}

bool is_p_power_order(const Group& G, int i, int64_t p) {
  int64_t o = G.order_of(i);
  while (o % p == 0) o /= p;
  return o == 1;
}

std::vector<int> normalizer_members(const Group& G, const std::vector<int>& domain,
                                    const Subgroup& P) {
  std::vector<int> out;
  for (int j : domain) {
    bool ok = true;
    for (int s : P.gens)
      if (!P.contains(G.conj(j, s))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(j);
  }
  return out;
}

Subgroup sylow_in_domain(const Group& G, const std::vector<int>& domain, int64_t sub_order,
                         int64_t p) {
  if (sub_order % p != 0)
    fail(Errc::PrimeDoesNotDivide, std::to_string(p) + " does not divide the subgroup order");
  int64_t target = p_part(sub_order, p);

  // seed with the p-part of the least element whose order p divides
  int seed = -1;
  for (int i : domain) {
    if (G.order_of(i) % p == 0) {
      int64_t o = G.order_of(i);
      seed = G.pow(i, o / p_part(o, p));
      break;
    }
  }
  if (seed < 0) fail(Errc::InvariantViolated, "no p-element found");

  Subgroup P = closure(G, {seed});
  while (P.order() < target) {
    // normalizer ascent: a p-element of N(P) outside P extends P to a
    // strictly larger p-subgroup
    std::vector<int> N = normalizer_members(G, domain, P);
    int next = -1;
    for (int y : N) {
      if (y != 0 && !P.contains(y) && is_p_power_order(G, y, p)) {
        next = y;
        break;
      }
    }
    if (next < 0) fail(Errc::InvariantViolated, "normalizer ascent stalled");
    std::vector<int> gens = P.gens;
    gens.push_back(next);
    P = closure(G, gens);
  }
  return P;
}

}  // namespace

Subgroup sylow_subgroup(const Group& G, int64_t p) {
  if (G.order64() % p != 0)
    fail(Errc::PrimeDoesNotDivide, std::to_string(p) + " does not divide the group order");
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return sylow_in_domain(G, all, G.order64(), p);
}

Subgroup sylow_in(const Group& G, const Subgroup& H, int64_t p) {
  return sylow_in_domain(G, H.elems, H.order(), p);
}

Subgroup p_radical(const Group& G, int64_t p) {
  if (G.order64() % p != 0) return trivial_subgroup(G);
  Subgroup P = sylow_subgroup(G, p);
  // intersect with conjugate subgroups until stable; the fixpoint is the
  // largest normal subgroup inside P
  std::vector<int> members = P.elems;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g : G.generator_indices()) {
      std::vector<uint8_t> conj_mask(G.order(), 0);
      for (int x : members) conj_mask[G.conj(g, x)] = 1;
      std::vector<int> kept;
      kept.reserve(members.size());
      for (int x : members)
        if (conj_mask[x]) kept.push_back(x);
      if (kept.size() != members.size()) {
        members = std::move(kept);
        changed = true;
      }
    }
  }
  return subgroup_from_members(G, std::move(members));
}

Subgroup fitting(const Group& G) {
  std::vector<int> seeds;
  for (auto [p, e] : numth::factorize(G.order64()).factors) {
    (void)e;
    Subgroup Op = p_radical(G, p);
    seeds.insert(seeds.end(), Op.gens.begin(), Op.gens.end());
  }
  return closure(G, seeds);
}

Subgroup fitting2(GroupPtr G) {
  Subgroup F = fitting(*G);
  if (F.order() == G->order64()) return F;
  GroupPtr Q = quotient(G, F);
  Subgroup FQ = fitting(*Q);
  std::vector<int> members;
  for (int i = 0; i < G->order(); ++i)
    if (FQ.contains(Q->coset_of(i))) members.push_back(i);
  return subgroup_from_members(*G, std::move(members));
}

std::vector<std::vector<int>> prime_order_classes(const Group& G) {
  std::vector<std::vector<int>> classes;
  std::vector<uint8_t> visited(G.order(), 0);
  for (int i = 1; i < G.order(); ++i) {
    if (visited[i] || !numth::is_prime(G.order_of(i))) continue;
    std::vector<int> cls = {i};
    visited[i] = 1;
    for (size_t at = 0; at < cls.size(); ++at) {
      for (int g : G.generator_indices()) {
        int c = G.conj(g, cls[at]);
        if (!visited[c]) {
          visited[c] = 1;
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& G) {
  std::vector<Subgroup> closures;
  for (const auto& cls : prime_order_classes(G)) {
    Subgroup N = normal_closure(G, {cls[0]});
    bool dup = false;
    for (const auto& seen : closures)
      if (seen.same_set(N)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(N));
  }
  std::vector<Subgroup> minimal;
  for (size_t i = 0; i < closures.size(); ++i) {
    bool is_min = true;
    for (size_t j = 0; j < closures.size(); ++j)
      if (i != j && closures[j].order() < closures[i].order() &&
          closures[j].subset_of(closures[i])) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(closures[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return minimal;
}

Subgroup socle(const Group& G) {
  std::vector<int> seeds;
  for (const auto& N : minimal_normal_subgroups(G))
    seeds.insert(seeds.end(), N.gens.begin(), N.gens.end());
  return closure(G, seeds);
}

bool is_simple(const Group& G) {
  if (G.order() <= 1) return false;
  for (const auto& cls : prime_order_classes(G))
    if (normal_closure(G, {cls[0]}).order() != G.order64()) return false;
  return true;
}

GroupPtr quotient(GroupPtr G, const Subgroup& N) {
  if (!is_normal(*G, N)) fail(Errc::NotNormal, "subgroup is not normal");
  return quotient_subgroup(G, whole_group(*G), N);
}

GroupPtr quotient_subgroup(GroupPtr G, const Subgroup& H, const Subgroup& N) {
  if (!N.subset_of(H)) fail(Errc::NotNormal, "N is not contained in H");
  for (int h : H.gens)
    for (int s : N.gens)
      if (!N.contains(G->conj(h, s))) fail(Errc::NotNormal, "N is not normal in H");

  std::vector<int> coset_of(G->order(), -1);
  std::vector<int> reps;
  for (int h : H.elems) {
    if (coset_of[h] != -1) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(h);
    for (int m : N.elems) coset_of[G->mul(h, m)] = c;
  }

  std::vector<int> gen_cosets;
  for (int h : H.gens) {
    int c = coset_of[h];
    if (c != 0 && std::find(gen_cosets.begin(), gen_cosets.end(), c) == gen_cosets.end())
      gen_cosets.push_back(c);
  }
  return Group::from_cosets(std::move(G), std::move(reps), std::move(coset_of),
                            std::move(gen_cosets));
}

std::map<int64_t, int64_t> order_spectrum(const Group& G) {
  std::map<int64_t, int64_t> spec;
  for (int i = 0; i < G.order(); ++i) spec[G.order_of(i)] += 1;
  return spec;
}

std::map<int64_t, int64_t> order_spectrum_of(const Group& G, const Subgroup& H) {
  std::map<int64_t, int64_t> spec;
  for (int i : H.elems) spec[G.order_of(i)] += 1;
  return spec;
}

bool is_fpf_action(const Group& G, const Subgroup& N, const Subgroup& H) {
  for (int h : H.gens)
    for (int x : N.gens)
      if (!N.contains(G.conj(h, x))) fail(Errc::NotNormalized, "H does not normalize N");
  for (int x : H.elems)
    if (x != 0 && N.contains(x)) fail(Errc::NontrivialIntersection, "H meets N nontrivially");

  for (int h : H.elems) {
    if (h == 0) continue;
    for (int x : N.elems) {
      if (x == 0) continue;
      if (G.conj(h, x) == x) return false;
    }
  }
  return true;
}

bool is_nilpotent(const Group& G) {
  for (auto [p, e] : numth::factorize(G.order64()).factors) {
    (void)e;
    if (!is_normal(G, sylow_subgroup(G, p))) return false;
  }
  return true;
}

std::vector<uint8_t> pth_power_mask(const Group& G, int64_t p) {
  std::vector<uint8_t> mask(G.order(), 0);
  for (int i = 0; i < G.order(); ++i) mask[G.pow(i, p)] = 1;
  return mask;
}

}  // namespace poco::grp
