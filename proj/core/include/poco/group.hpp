#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "poco/error.hpp"
#include "poco/ff.hpp"

namespace poco::grp {

// ---------------------------------------------------------------------------
// Elements. A group is generated from elements of a single backend kind:
// permutations, matrices over a finite field, or affine pairs (v, A) acting
// as w -> v + A*w. Quotient groups use coset labels internally and have no
// Element values of their own.
// ---------------------------------------------------------------------------

// Permutation on points 0..n-1 in image form: img[x] is the image of x.
// Products compose left to right: (a*b) maps x to b.img[a.img[x]].
struct Perm {
  std::vector<uint16_t> img;
  friend bool operator==(const Perm&, const Perm&) = default;
};

// Square matrix over a finite field, row-major; entries are field codes.
// dim <= 4; unused slots stay zero so hashing is canonical.
struct Mat {
  const ff::Field* f = nullptr;
  int dim = 0;
  std::array<uint32_t, 16> e{};
  friend bool operator==(const Mat&, const Mat&) = default;

  uint32_t at(int r, int c) const { return e[r * dim + c]; }
  void set(int r, int c, uint32_t v) { e[r * dim + c] = v; }
};

// Pair (v, A) with product (v,A)(w,B) = (v + A*w, A*B).
struct Aff {
  Mat a;
  std::array<uint32_t, 4> v{};
  friend bool operator==(const Aff&, const Aff&) = default;
};

using Element = std::variant<Perm, Mat, Aff>;

Element mul(const Element& a, const Element& b);  // MixedBackends on kind mismatch
Element identity_like(const Element& sample);
bool is_identity(const Element& e);

struct ElementHash {
  size_t operator()(const Element& e) const;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(const ff::Field* f, int dim);
bool mat_invertible(const Mat& m);

// ---------------------------------------------------------------------------
// Group: a fully enumerated finite group with an index-based multiplication
// oracle. Index 0 is the identity; indices are fixed by BFS from the identity
// in declared generator order, so witnesses and reports are reproducible.
// Immutable after construction and safe to share across threads.
// ---------------------------------------------------------------------------

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  // BFS closure of the generators; throws CapExceeded if the closure passes
  // cap and MixedBackends if the generators disagree on backend or domain.
  static GroupPtr generate(const std::vector<Element>& gens, int64_t cap);

  // Quotient backed by a parent group: cosets labelled by their least parent
  // index, listed in increasing order of that representative.
  static GroupPtr from_cosets(GroupPtr parent, std::vector<int> reps, std::vector<int> coset_of,
                              std::vector<int> gen_cosets);

  int order() const { return static_cast<int>(n_); }
  int64_t order64() const { return n_; }

  int mul(int i, int j) const;
  int inv(int i) const { return inv_[i]; }
  int pow(int i, int64_t e) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int order_of(int i) const { return ord_[i]; }

  const std::vector<int>& generator_indices() const { return gens_; }

  bool is_quotient() const;
  const GroupPtr& parent() const;       // quotient groups only
  int rep_of(int coset) const;          // quotient groups only
  int coset_of(int parent_index) const; // quotient groups only; -1 outside domain

  const Element& element(int i) const;  // concrete groups only

  // sorted element indices of <g>
  std::vector<int> cyclic_subgroup(int i) const;

  // stable digest of the ordered element list (concrete) or coset reps
  uint64_t element_list_hash() const;

 private:
  struct Concrete {
    std::vector<Element> elems;
    std::unordered_map<Element, int, ElementHash> index;
  };
  struct Cosets {
    GroupPtr parent;
    std::vector<int> reps;
    std::vector<int> coset_of;
  };

  Group() = default;
  void finish();  // order and inverse tables

  std::variant<Concrete, Cosets> data_;
  std::vector<int> gens_;
  std::vector<int> ord_;
  std::vector<int> inv_;
  int64_t n_ = 0;
};

// ---------------------------------------------------------------------------
// Subgroups are index sets into a parent group plus a small generating set.
// All algorithms below are pure functions of immutable groups.
// ---------------------------------------------------------------------------

struct Subgroup {
  const Group* g = nullptr;
  std::vector<int> elems;        // ascending
  std::vector<int> gens;         // generate the subgroup; not necessarily minimal
  std::vector<uint8_t> mask;     // size |G| membership

  int64_t order() const { return static_cast<int64_t>(elems.size()); }
  bool contains(int i) const { return mask[i] != 0; }
  bool same_set(const Subgroup& other) const { return elems == other.elems; }
  bool subset_of(const Subgroup& other) const;
};

Subgroup whole_group(const Group& G);
Subgroup trivial_subgroup(const Group& G);
Subgroup closure(const Group& G, std::vector<int> seeds);
// subgroup from a full member list (must be closed); finds a small gen set
Subgroup subgroup_from_members(const Group& G, std::vector<int> members);

int element_order(const Group& G, int i);  // ElementNotInGroup on bad index
Subgroup centralizer(const Group& G, int i);
Subgroup centralizer_in(const Group& G, const std::vector<int>& domain, int i);
Subgroup center(const Group& G);
Subgroup normal_closure(const Group& G, const std::vector<int>& seeds);
bool is_normal(const Group& G, const Subgroup& H);

// derived series G >= G' >= G'' >= ... until stable
std::vector<Subgroup> derived_series(const Group& G);
bool is_solvable(const Group& G);
bool is_abelian(const Group& G);
bool is_abelian_subgroup(const Group& G, const Subgroup& H);
bool is_nilpotent(const Group& G);  // every Sylow subgroup normal
bool is_cyclic(const Group& G);
bool is_simple(const Group& G);

Subgroup sylow_subgroup(const Group& G, int64_t p);  // PrimeDoesNotDivide
// Sylow p-subgroup of the subgroup H (normalizer ascent inside H)
Subgroup sylow_in(const Group& G, const Subgroup& H, int64_t p);
Subgroup p_radical(const Group& G, int64_t p);       // O_p(G); trivial when p does not divide |G|
Subgroup fitting(const Group& G);
Subgroup fitting2(GroupPtr G);

std::vector<Subgroup> minimal_normal_subgroups(const Group& G);
Subgroup socle(const Group& G);

GroupPtr quotient(GroupPtr G, const Subgroup& N);  // NotNormal
// quotient H/N for N normal in H <= G
GroupPtr quotient_subgroup(GroupPtr G, const Subgroup& H, const Subgroup& N);

std::map<int64_t, int64_t> order_spectrum(const Group& G);
std::map<int64_t, int64_t> order_spectrum_of(const Group& G, const Subgroup& H);

// true iff every non-identity element of H fixes only the identity of N
// under conjugation. H must normalize N and intersect it trivially.
bool is_fpf_action(const Group& G, const Subgroup& N, const Subgroup& H);

// one sorted class per conjugacy class of elements of prime order,
// ordered by least member
std::vector<std::vector<int>> prime_order_classes(const Group& G);

// mask of {h^p : h in G}
std::vector<uint8_t> pth_power_mask(const Group& G, int64_t p);

}  // namespace poco::grp
