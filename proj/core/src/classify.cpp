#include "poco/classify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "poco/numth.hpp"

namespace poco::classify {

using grp::Group;
using grp::GroupPtr;
using grp::Subgroup;
using nlohmann::ordered_json;

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::NILPOTENT: return "NILPOTENT_THM";
    case Theorem::SOLVABLE: return "T_SOLVABLE";
    case Theorem::NONSOLVABLE: return "T_NONSOLVABLE";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// power-graph adjacency and witnesses
// ---------------------------------------------------------------------------

bool power_adjacent(const Group& G, int i, int j) {
  if (i == j) return false;
  int x = G.mul(0, i);
  while (x != 0) {
    if (x == j) return true;
    x = G.mul(x, i);
  }
  x = G.mul(0, j);
  while (x != 0) {
    if (x == i) return true;
    x = G.mul(x, j);
  }
  return false;
}

bool verify_p4_witness(const Group& G, const std::array<int, 4>& w) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (w[i] == w[j]) return false;
      bool want = j == i + 1;
      if (power_adjacent(G, w[i], w[j]) != want) return false;
    }
  return true;
}

namespace {

Verdict brute_from_reduced(const Group& G, const graphs::ReducedPowerGraph& red) {
  Verdict v;
  v.method = "brute";
  v.is_power_cograph = graphs::is_cograph(red.graph);
  if (!v.is_power_cograph) {
    auto w = graphs::find_induced_p4(red.graph);
    if (!w) fail(Errc::InvariantViolated, "recognition and witness search disagree");
    std::array<int, 4> lifted = {red.rep[(*w)[0]], red.rep[(*w)[1]], red.rep[(*w)[2]],
                                 red.rep[(*w)[3]]};
    if (!verify_p4_witness(G, lifted))
      fail(Errc::InvariantViolated, "lifted witness is not an induced path");
    v.witness = lifted;
  }
  return v;
}

}  // namespace

Verdict brute_power_cograph(const Group& G) {
  return brute_from_reduced(G, graphs::reduced_power_graph(G));
}

// ---------------------------------------------------------------------------
// centralizer criterion
// ---------------------------------------------------------------------------

namespace {

// cyclic subgroups of order q inside C, one representative generator each
std::vector<int> order_q_subgroup_gens(const Group& G, const Subgroup& C, int64_t q) {
  std::vector<int> gens;
  std::vector<uint8_t> seen(G.order(), 0);
  for (int z : C.elems) {
    if (G.order_of(z) != q || seen[z]) continue;
    for (int w : G.cyclic_subgroup(z)) seen[w] = 1;
    gens.push_back(z);
  }
  return gens;
}

bool subgroup_is_cyclic(const Group& G, const Subgroup& H) {
  for (int x : H.elems)
    if (G.order_of(x) == H.order()) return true;
  return false;
}

}  // namespace

CentralizerOutcome centralizer_verdict(GroupPtr Gp) {
  const Group& G = *Gp;
  CentralizerOutcome out;
  out.verdict.method = "centralizer";
  out.verdict.is_power_cograph = true;

  std::map<int64_t, std::vector<uint8_t>> power_masks;
  auto is_pth_power = [&](int64_t p, int g) {
    auto it = power_masks.find(p);
    if (it == power_masks.end()) it = power_masks.emplace(p, grp::pth_power_mask(G, p)).first;
    return it->second[g] != 0;
  };

  auto violate = [&](int g, const std::string& why) {
    out.verdict.is_power_cograph = false;
    std::ostringstream os;
    os << "element " << g << " of order " << G.order_of(g) << ": " << why;
    out.violation = os.str();
  };

  for (const auto& cls : grp::prime_order_classes(G)) {
    int g = cls[0];
    int64_t p = G.order_of(g);
    Subgroup C = grp::centralizer(G, g);
    auto cf = numth::factorize(C.order());

    bool c_is_p_group = cf.factors.size() == 1 && cf.factors[0].first == p;

    for (auto [q, e] : cf.factors) {
      if (q == p) continue;
      if (q < p) {
        // the whole centralizer must be C_q x C_p
        bool ok = C.order() == p * q && grp::is_abelian_subgroup(G, C);
        if (ok) {
          auto spec = grp::order_spectrum_of(G, C);
          ok = spec.count(p) == 1 && spec.count(q) == 1;
        }
        if (!ok) {
          violate(g, "|C| = " + std::to_string(C.order()) + " has smaller prime " +
                         std::to_string(q) + " but C is not C_" + std::to_string(q) + " x C_" +
                         std::to_string(p));
          return out;
        }
      } else {
        // larger prime: |C| must be q * p^m and some normal C_q must have a
        // quotient <g> x C_{p^n}
        bool shape_ok = cf.factors.size() == 2 && e == 1;
        // the other factor must be the p-part
        if (shape_ok)
          for (auto [r, re] : cf.factors) {
            (void)re;
            if (r != q && r != p) shape_ok = false;
          }
        if (!shape_ok) {
          violate(g, "|C| = " + std::to_string(C.order()) + " is not q * p^m for q = " +
                         std::to_string(q));
          return out;
        }
        bool found = false;
        for (int z : order_q_subgroup_gens(G, C, q)) {
          Subgroup N = grp::closure(G, {z});
          bool normal = true;
          for (int h : C.gens)
            if (!N.contains(G.conj(h, z))) {
              normal = false;
              break;
            }
          if (!normal) continue;
          GroupPtr Q = grp::quotient_subgroup(Gp, C, N);
          if (!grp::is_abelian(*Q)) continue;
          int gbar = Q->coset_of(g);
          if (Q->order64() == p) {
            found = true;  // C/N = <g>
            break;
          }
          Subgroup gsub = grp::closure(*Q, {gbar});
          if (gsub.order() != p) continue;
          GroupPtr Q2 = grp::quotient(Q, gsub);
          if (grp::is_cyclic(*Q2) && !grp::is_cyclic(*Q)) {
            found = true;  // C/N = <g> x C_{p^n} with n >= 1
            break;
          }
        }
        if (!found) {
          violate(g, "no normal C_" + std::to_string(q) + " in C with quotient <g> x C_{p^n}");
          return out;
        }
      }
    }

    if (!c_is_p_group && is_pth_power(p, g)) {
      violate(g, "has a non-" + std::to_string(p) + "-power centralizer but is a " +
                     std::to_string(p) + "-th power");
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// solvable classification
// ---------------------------------------------------------------------------

namespace {

struct Match {
  std::string label;
  ordered_json data;
};

// G = (C_p : C_{q^n}) x C_q up to isomorphism, checked structurally
std::optional<Match> match_s2(GroupPtr Gp, int64_t p, int64_t q, int64_t n) {
  const Group& G = *Gp;
  Subgroup P = grp::p_radical(G, p);
  if (P.order() != p) return std::nullopt;
  Subgroup Q = grp::sylow_subgroup(G, q);
  int x = P.gens.empty() ? 0 : P.gens[0];
  Subgroup K = grp::centralizer_in(G, Q.elems, x);
  if (K.order() != q) return std::nullopt;
  GroupPtr QK = grp::quotient_subgroup(Gp, Q, K);
  if (!grp::is_cyclic(*QK)) return std::nullopt;
  if (n >= 1 && subgroup_is_cyclic(G, Q)) return std::nullopt;
  Match m;
  m.label = "S2";
  m.data = {{"p", p}, {"q", q}, {"n", n}};
  return m;
}

std::optional<Match> match_s3(GroupPtr Gp, int64_t p, int64_t q, int64_t r, int64_t n) {
  const Group& G = *Gp;
  Subgroup F = grp::fitting(G);
  if (F.order() != p * q) return std::nullopt;
  if (!subgroup_is_cyclic(G, F)) return std::nullopt;
  Subgroup R = grp::sylow_subgroup(G, r);
  if (!subgroup_is_cyclic(G, R)) return std::nullopt;
  if (!grp::is_fpf_action(G, F, R)) return std::nullopt;
  Match m;
  m.label = "S3";
  m.data = {{"p", std::min(p, q)}, {"q", std::max(p, q)}, {"r", r}, {"n", n}};
  return m;
}

std::optional<Match> match_s4(GroupPtr Gp) {
  const Group& G = *Gp;
  auto fac = numth::factorize(G.order64());
  if (fac.factors.size() != 4) return std::nullopt;
  for (auto [pp, e] : fac.factors)
    if (e != 1) return std::nullopt;
  Subgroup F = grp::fitting(G);
  auto ff = numth::factorize(F.order());
  if (ff.factors.size() != 2 || ff.factors[0].second != 1 || ff.factors[1].second != 1)
    return std::nullopt;
  if (!subgroup_is_cyclic(G, F)) return std::nullopt;
  int64_t r = ff.factors[0].first, s = ff.factors[1].first;
  int64_t pq = G.order64() / (r * s);
  // a cyclic complement: the least element of order pq meeting F trivially
  for (int h = 1; h < G.order(); ++h) {
    if (G.order_of(h) != pq) continue;
    Subgroup H = grp::closure(G, {h});
    bool meets = false;
    for (int x : H.elems)
      if (x != 0 && F.contains(x)) {
        meets = true;
        break;
      }
    if (meets) continue;
    if (grp::is_fpf_action(G, F, H)) {
      auto pqf = numth::factorize(pq);
      Match m;
      m.label = "S4";
      m.data = {{"r", r}, {"s", s}, {"p", pqf.factors[0].first}, {"q", pqf.factors[1].first}};
      return m;
    }
  }
  return std::nullopt;
}

// the Fitting-subgroup-is-a-prime-power cases S5a/S5b/S5c
std::vector<Match> match_s5(GroupPtr Gp) {
  std::vector<Match> out;
  const Group& G = *Gp;
  Subgroup F = grp::fitting(G);
  if (F.order() <= 1 || F.order() == G.order64()) return out;
  auto ff = numth::factorize(F.order());
  if (ff.factors.size() != 1) return out;
  int64_t r = ff.factors[0].first;

  GroupPtr Q = grp::quotient(Gp, F);
  Subgroup W = grp::fitting(*Q);

  auto complement_of_f = [&](int64_t target_order,
                             int64_t target_prime) -> std::optional<Subgroup> {
    // prime-power complements are Sylow subgroups; order-st complements are
    // generated by an element of order st
    if (target_prime != 0) return grp::sylow_subgroup(G, target_prime);
    for (int h = 1; h < G.order(); ++h) {
      if (G.order_of(h) != target_order) continue;
      Subgroup H = grp::closure(G, {h});
      bool meets = false;
      for (int x : H.elems)
        if (x != 0 && F.contains(x)) {
          meets = true;
          break;
        }
      if (!meets) return H;
    }
    return std::nullopt;
  };

  if (W.order() == Q->order64()) {
    // G/F nilpotent: single complement layer
    auto qf = numth::factorize(Q->order64());
    if (qf.factors.size() == 1) {
      int64_t s = qf.factors[0].first;
      int64_t k = qf.factors[0].second;
      if (s == 2 && Q->order64() >= 8 && !grp::is_cyclic(*Q)) {
        // generalized quaternion quotient: unique involution, non-cyclic
        int involutions = 0;
        for (int i = 1; i < Q->order(); ++i)
          if (Q->order_of(i) == 2) ++involutions;
        if (involutions == 1 && r != 2) {
          Subgroup C = grp::sylow_subgroup(G, 2);
          if (grp::is_fpf_action(G, F, C)) {
            Match m;
            m.label = "S5a";
            m.data = {{"r", r}, {"quaternion_order", Q->order64()}};
            out.push_back(m);
          }
        }
      }
      if (grp::is_cyclic(*Q) && s != r) {
        Subgroup C = grp::sylow_subgroup(G, s);
        if (grp::is_fpf_action(G, F, C)) {
          Match m;
          m.label = "S5b";
          m.data = {{"r", r}, {"p", s}, {"k", k}, {"m", 0}};
          out.push_back(m);
        }
      }
    } else if (qf.factors.size() == 2 && qf.factors[0].second == 1 &&
               qf.factors[1].second == 1 && grp::is_cyclic(*Q)) {
      int64_t s = qf.factors[0].first, t = qf.factors[1].first;
      if (s != r && t != r) {
        auto C = complement_of_f(s * t, 0);
        if (C && grp::is_fpf_action(G, F, *C)) {
          Match m;
          m.label = "S5c";
          m.data = {{"r", r}, {"p", s}, {"q", t}, {"m", 0}};
          out.push_back(m);
        }
      }
    }
    return out;
  }

  // two layers: W = Fit(G/F) acts on F, a cyclic r-group acts on W
  auto wf = numth::factorize(W.order());
  GroupPtr Qtop = grp::quotient_subgroup(Q, grp::whole_group(*Q), W);
  auto tf = numth::factorize(Qtop->order64());
  if (tf.factors.size() != 1 || tf.factors[0].first != r) return out;
  int64_t m_exp = tf.factors[0].second;
  if (!grp::is_cyclic(*Qtop)) return out;
  Subgroup Rbar = grp::sylow_subgroup(*Q, r);
  if (!subgroup_is_cyclic(*Q, Rbar)) return out;
  if (!grp::is_fpf_action(*Q, W, Rbar)) return out;

  // the middle layer lifted into G: Fit2 = preimage of W
  Subgroup F2 = grp::fitting2(Gp);
  if (F2.order() != F.order() * W.order()) return out;

  if (wf.factors.size() == 1 && wf.factors[0].first != r && subgroup_is_cyclic(*Q, W)) {
    int64_t s = wf.factors[0].first;
    int64_t k = wf.factors[0].second;
    Subgroup C = grp::sylow_in(G, F2, s);
    if (grp::is_fpf_action(G, F, C)) {
      Match m;
      m.label = "S5b";
      m.data = {{"r", r}, {"p", s}, {"k", k}, {"m", m_exp}};
      out.push_back(m);
    }
  } else if (wf.factors.size() == 2 && wf.factors[0].second == 1 && wf.factors[1].second == 1 &&
             wf.factors[0].first != r && wf.factors[1].first != r &&
             subgroup_is_cyclic(*Q, W)) {
    int64_t s = wf.factors[0].first, t = wf.factors[1].first;
    // a cyclic complement of F inside Fit2
    for (int h : F2.elems) {
      if (G.order_of(h) != s * t) continue;
      Subgroup H = grp::closure(G, {h});
      if (grp::is_fpf_action(G, F, H)) {
        Match m;
        m.label = "S5c";
        m.data = {{"r", r}, {"p", s}, {"q", t}, {"m", m_exp}};
        out.push_back(m);
        break;
      }
    }
  }
  return out;
}

}  // namespace

CaseAssignment solvable_case(GroupPtr Gp) {
  const Group& G = *Gp;
  if (!grp::is_solvable(G)) fail(Errc::NotSolvable, "group is not solvable");

  std::vector<Match> matches;
  auto fac = numth::factorize(G.order64());
  bool nilpotent = grp::is_nilpotent(G);

  // cyclic of order pq: the nilpotent branch that is not a prime power
  if (nilpotent && numth::order_class(G.order64()) == numth::OrderClass::TWO_DISTINCT_PRIMES &&
      grp::is_cyclic(G)) {
    Match m;
    m.label = "CYCLIC_PQ";
    m.data = {{"p", fac.factors[0].first}, {"q", fac.factors[1].first}};
    matches.push_back(m);
  }

  if (G.order64() == 1 || fac.factors.size() == 1) {
    Match m;
    m.label = "S1";
    m.data = {{"p", G.order64() == 1 ? 1 : fac.factors[0].first},
              {"exponent", G.order64() == 1 ? 0 : fac.factors[0].second}};
    matches.push_back(m);
  }

  if (fac.factors.size() == 2) {
    // (C_p : C_{q^n}) x C_q needs |G| = p * q^(n+1)
    for (auto [p, pe] : fac.factors) {
      if (pe != 1) continue;
      for (auto [q, qe] : fac.factors) {
        if (q == p) continue;
        if (auto m = match_s2(Gp, p, q, qe - 1)) {
          matches.push_back(*m);
          break;
        }
      }
      if (!matches.empty() && matches.back().label == "S2") break;
    }
  }

  if (fac.factors.size() == 3) {
    for (auto [r, re] : fac.factors) {
      bool others_squarefree = true;
      std::vector<int64_t> others;
      for (auto [p, pe] : fac.factors)
        if (p != r) {
          others.push_back(p);
          if (pe != 1) others_squarefree = false;
        }
      if (!others_squarefree) continue;
      if (auto m = match_s3(Gp, others[0], others[1], r, re)) {
        matches.push_back(*m);
        break;
      }
    }
  }

  if (auto m = match_s4(Gp)) matches.push_back(*m);
  for (auto& m : match_s5(Gp)) matches.push_back(m);

  CaseAssignment out;
  static const char* precedence[] = {"CYCLIC_PQ", "S1", "S2", "S3", "S4", "S5a", "S5b", "S5c"};
  const Match* primary = nullptr;
  for (const char* label : precedence) {
    for (const auto& m : matches)
      if (m.label == label) {
        primary = &m;
        break;
      }
    if (primary) break;
  }
  if (primary) {
    out.label = primary->label;
    out.data = primary->data;
    out.theorem = primary->label == "CYCLIC_PQ" ? Theorem::NILPOTENT : Theorem::SOLVABLE;
    for (const auto& m : matches)
      if (m.label != primary->label) out.secondary.push_back(m.label);
  } else {
    out.label = "NOT_POWER_COGRAPH";
    out.theorem = nilpotent ? Theorem::NILPOTENT : Theorem::SOLVABLE;
  }
  return out;
}

// ---------------------------------------------------------------------------
// non-solvable classification
// ---------------------------------------------------------------------------

namespace {

std::set<int64_t> spectrum_orders(const Group& G) {
  std::set<int64_t> out;
  for (auto [o, c] : grp::order_spectrum(G)) {
    (void)c;
    out.insert(o);
  }
  return out;
}

bool two_isolated(const Group& G) {
  for (int64_t o : spectrum_orders(G))
    if (o % 2 == 0 && numth::order_class(o) != numth::OrderClass::PRIME_POWER) return false;
  return true;
}

bool divides_one_of(int64_t o, const std::vector<int64_t>& tops) {
  for (int64_t t : tops)
    if (t % o == 0) return true;
  return false;
}

// reference groups for the isomorphism-by-spectrum comparisons
const Group& reference_group(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[spec];
  if (!slot) slot = zoo::build(zoo::parse(spec), 100000);
  return *slot;
}

}  // namespace

std::vector<SimpleId> identify_simple(const Group& G) {
  std::vector<SimpleId> out;
  const int64_t n = G.order64();
  auto orders = spectrum_orders(G);

  // PSL2(q): order q(q^2-1)/gcd(2, q-1)
  for (int64_t q = 4; q * (q * q - 1) / 2 <= n; ++q) {
    int64_t p;
    int k;
    if (!numth::is_prime_power(q, &p, &k)) continue;
    int64_t d = p == 2 ? 1 : 2;
    if (q * (q * q - 1) / d != n) continue;
    std::vector<int64_t> tops = {p, (q - 1) / d, (q + 1) / d};
    bool ok = true;
    for (int64_t o : orders)
      if (!divides_one_of(o, tops)) ok = false;
    for (int64_t t : tops)
      if (t > 1 && !orders.count(t)) ok = false;
    if (!ok)
      fail(Errc::IdentificationAmbiguous,
           "order matches psl2:" + std::to_string(q) + " but the spectrum does not");
    out.push_back({"psl2", q});
  }

  // Sz(q): order q^2(q^2+1)(q-1), q = 2^(2e+1)
  for (int64_t q = 8; q * q * (q * q + 1) * (q - 1) <= n && q <= (int64_t{1} << 20); q *= 4) {
    if (q * q * (q * q + 1) * (q - 1) != n) continue;
    int64_t s = 1;
    while (s * s < 2 * q) ++s;  // sqrt(2q), exact for this shape
    std::vector<int64_t> tops = {4, q - 1, q + s + 1, q - s + 1};
    bool ok = true;
    for (int64_t o : orders)
      if (!divides_one_of(o, tops)) ok = false;
    for (int64_t t : {q - 1, q + s + 1, q - s + 1})
      if (!orders.count(t)) ok = false;
    if (!ok)
      fail(Errc::IdentificationAmbiguous,
           "order matches sz:" + std::to_string(q) + " but the spectrum does not");
    out.push_back({"sz", q});
  }

  if (n == 20160) {
    // the one order collision at desk scale: the alternating group on eight
    // points has elements of order 15, the linear group does not
    if (!orders.count(15)) out.push_back({"psl3_4", 4});
  }
  return out;
}

CaseAssignment nonsolvable_case(GroupPtr Gp) {
  const Group& G = *Gp;
  if (grp::is_solvable(G)) fail(Errc::NotNonsolvable, "group is solvable");

  CaseAssignment out;
  out.theorem = Theorem::NONSOLVABLE;

  if (grp::is_simple(G)) {
    auto ids = identify_simple(G);
    ordered_json idlist = ordered_json::array();
    const SimpleId* admissible = nullptr;
    ordered_json admissible_data;
    for (const auto& id : ids) {
      ordered_json j = {{"family", id.family}, {"q", id.q}};
      if (id.family == "psl2") {
        auto adm = numth::simple_admissible(
            id.q % 2 == 0 ? numth::Family::PSL2_EVEN : numth::Family::PSL2_ODD, id.q);
        j["admissible"] = adm.admissible;
        if (adm.admissible && !admissible) {
          admissible = &id;
          admissible_data = j;
        }
      } else if (id.family == "sz") {
        auto adm = numth::simple_admissible(numth::Family::SZ, id.q);
        int64_t k = 0, qq = id.q;
        while (qq > 1) {
          qq /= 2;
          ++k;
        }
        int64_t e = (k - 1) / 2;
        j["admissible"] = adm.admissible;
        j["e"] = e;
        j["theorem_literal"] = e >= 2 ? "admitted" : "excluded_by_e_bound";
        if (adm.admissible && !admissible) {
          admissible = &id;
          admissible_data = j;
        }
      } else {  // psl3_4
        j["admissible"] = true;
        if (!admissible) {
          admissible = &id;
          admissible_data = j;
        }
      }
      idlist.push_back(j);
    }
    if (admissible) {
      out.label = "N1";
      out.data = admissible_data;
      out.data["identified_as"] = idlist;
    } else {
      out.label = "NOT_POWER_COGRAPH";
      out.data["identified_as"] = idlist;
    }
    return out;
  }

  auto mins = grp::minimal_normal_subgroups(G);
  Subgroup S = grp::socle(G);

  bool socle_simple_nonabelian =
      mins.size() == 1 && !grp::is_abelian_subgroup(G, S) && S.order() > 1;
  if (socle_simple_nonabelian) {
    // almost simple when the socle is self-centralizing from outside
    bool centralizer_trivial = true;
    for (int i = 1; i < G.order() && centralizer_trivial; ++i) {
      bool commutes = true;
      for (int s : S.gens)
        if (G.mul(i, s) != G.mul(s, i)) {
          commutes = false;
          break;
        }
      if (commutes) centralizer_trivial = false;
    }
    if (centralizer_trivial) {
      auto spec = grp::order_spectrum(G);
      for (const char* name : {"pgl2:5", "pgl2:7", "pgl2:9", "m10"}) {
        const Group& ref = reference_group(name);
        if (ref.order64() == G.order64() && grp::order_spectrum(ref) == spec) {
          out.label = "N2";
          out.data = {{"name", name}, {"socle_order", S.order()}};
          return out;
        }
      }
      out.label = "NOT_POWER_COGRAPH";
      out.data = {{"reason", "almost simple but not among the admissible extensions"}};
      return out;
    }
    out.label = "NOT_POWER_COGRAPH";
    out.data = {{"reason", "non-abelian socle with a non-trivial centralizer"}};
    return out;
  }

  Subgroup O2 = grp::p_radical(G, 2);
  if (O2.order() <= 1) {
    out.label = "NOT_POWER_COGRAPH";
    out.data = {{"reason", "socle neither simple nor a 2-group"}};
    return out;
  }
  if (!two_isolated(G)) {
    out.label = "NOT_POWER_COGRAPH";
    out.data = {{"reason", "2 is not isolated in the prime graph"}};
    return out;
  }
  if (!S.same_set(O2)) {
    out.label = "NOT_POWER_COGRAPH";
    out.data = {{"reason", "socle differs from O_2"}};
    return out;
  }
  GroupPtr T = grp::quotient(Gp, O2);
  if (!grp::is_simple(*T)) {
    out.label = "NOT_POWER_COGRAPH";
    out.data = {{"reason", "quotient by O_2 is not simple"}};
    return out;
  }

  auto ids = identify_simple(*T);
  for (const auto& id : ids) {
    int64_t module_order = 0;
    std::string label;
    ordered_json data;
    if (id.family == "psl2" && id.q % 2 == 0 && id.q >= 4) {
      auto adm = numth::simple_admissible(numth::Family::PSL2_EVEN, id.q);
      if (!adm.admissible) continue;
      module_order = id.q * id.q;  // natural 2-dimensional module
      label = "N3";
      data = {{"quotient", "psl2:" + std::to_string(id.q)}, {"q", id.q}};
    } else if (id.family == "sz") {
      auto adm = numth::simple_admissible(numth::Family::SZ, id.q);
      if (!adm.admissible) continue;
      module_order = id.q * id.q * id.q * id.q;  // natural 4-dimensional module
      label = "N4";
      int64_t k = 0, qq = id.q;
      while (qq > 1) {
        qq /= 2;
        ++k;
      }
      data = {{"quotient", "sz:" + std::to_string(id.q)},
              {"q", id.q},
              {"e", (k - 1) / 2},
              {"theorem_literal", (k - 1) / 2 >= 2 ? "admitted" : "excluded_by_e_bound"}};
    } else {
      continue;
    }

    bool modules_ok = !mins.empty();
    for (const auto& M : mins) {
      if (M.order() != module_order) modules_ok = false;
      if (!grp::is_abelian_subgroup(G, M)) modules_ok = false;
      for (int x : M.elems)
        if (x != 0 && G.order_of(x) != 2) modules_ok = false;
    }
    if (!modules_ok) continue;

    bool odd_fpf = true;
    for (const auto& cls : grp::prime_order_classes(G)) {
      if (G.order_of(cls[0]) == 2) continue;
      for (int x : O2.elems)
        if (x != 0 && G.conj(cls[0], x) == x) {
          odd_fpf = false;
          break;
        }
      if (!odd_fpf) break;
    }
    if (!odd_fpf) continue;

    out.label = label;
    out.data = data;
    out.data["module_order"] = module_order;
    out.data["minimal_normal_count"] = static_cast<int64_t>(mins.size());
    return out;
  }

  out.label = "NOT_POWER_COGRAPH";
  out.data = {{"reason", "O_2 extension without an admissible simple quotient"}};
  return out;
}

// ---------------------------------------------------------------------------
// tuple lifting through a quotient
// ---------------------------------------------------------------------------

std::optional<std::array<int, 4>> lift_quotient_tuple(const Group& G, const Group& Q,
                                                      const Subgroup& N,
                                                      const std::array<int, 4>& tuple) {
  // target adjacency pattern in the quotient
  bool pat[4][4] = {};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) pat[i][j] = i != j && power_adjacent(Q, tuple[i], tuple[j]);

  // coset members of each tuple element
  std::array<std::vector<int>, 4> cosets;
  for (int i = 0; i < 4; ++i) {
    int rep = Q.rep_of(tuple[i]);
    for (int m : N.elems) cosets[i].push_back(G.mul(rep, m));
    std::sort(cosets[i].begin(), cosets[i].end());
  }

  std::array<int, 4> pick{};
  auto matches_so_far = [&](int upto) {
    for (int i = 0; i < upto; ++i) {
      if (pick[i] == pick[upto]) return false;
      if (power_adjacent(G, pick[i], pick[upto]) != pat[i][upto]) return false;
    }
    return true;
  };
  for (int a : cosets[0]) {
    pick[0] = a;
    for (int b : cosets[1]) {
      pick[1] = b;
      if (!matches_so_far(1)) continue;
      for (int c : cosets[2]) {
        pick[2] = c;
        if (!matches_so_far(2)) continue;
        for (int d : cosets[3]) {
          pick[3] = d;
          if (matches_so_far(3)) return pick;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// the full pipeline
// ---------------------------------------------------------------------------

Report analyze_group(GroupPtr G, const std::string& name, const Config& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  if (G->order64() > cfg.max_order)
    fail(Errc::CapExceeded, name + " exceeds the order cap " + std::to_string(cfg.max_order));

  Report r;
  r.spec = name;
  r.order = G->order64();
  r.solvable = grp::is_solvable(*G);
  r.prime_graph = graphs::prime_graph(*G);
  r.shape = graphs::shape_class(r.prime_graph);

  graphs::ReducedPowerGraph red = graphs::reduced_power_graph(*G);
  r.reduced_vertices = red.graph.n();
  if (red.graph.n() <= 2000) {
    r.reduced_edges = red.graph.edges_sorted();
    for (int v = 0; v < red.graph.n(); ++v)
      r.reduced_labels.push_back("g" + std::to_string(red.rep[v]) + "|" +
                                 std::to_string(red.rep_order[v]));
  }
  r.brute = brute_from_reduced(*G, red);

  CentralizerOutcome cent = centralizer_verdict(G);
  r.centralizer = cent.verdict;
  r.centralizer_violation = cent.violation;

  r.assignment = r.solvable ? solvable_case(G) : nonsolvable_case(G);
  if (r.assignment.data.contains("theorem_literal"))
    r.assignment.data["empirical"] = r.brute.is_power_cograph;

  bool case_positive = r.assignment.label != "NOT_POWER_COGRAPH";
  r.agreement = r.brute.is_power_cograph == r.centralizer.is_power_cograph &&
                r.brute.is_power_cograph == case_positive;

  auto t1 = std::chrono::steady_clock::now();
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

Report analyze(const zoo::GroupSpec& spec, const Config& cfg) {
  int64_t advertised = zoo::advertised_order(spec);
  if (advertised > cfg.max_order)
    fail(Errc::CapExceeded, spec.text + " has order " + std::to_string(advertised) +
                                " above the cap " + std::to_string(cfg.max_order));
  GroupPtr G = zoo::build(spec, cfg.max_order);
  return analyze_group(std::move(G), spec.text, cfg);
}

nlohmann::ordered_json to_json(const Report& r) {
  ordered_json j;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["solvable"] = r.solvable;

  ordered_json pg;
  pg["vertices"] = r.prime_graph.primes;
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : r.prime_graph.edges) edges.push_back({a, b});
  pg["edges"] = edges;
  j["prime_graph"] = pg;

  ordered_json shape;
  shape["tag"] = graphs::to_string(r.shape.tag);
  if (r.shape.center) shape["center"] = *r.shape.center;
  else shape["center"] = nullptr;
  ordered_json secs = ordered_json::array();
  for (auto t : r.shape.secondary) secs.push_back(graphs::to_string(t));
  shape["secondary"] = secs;
  shape["min_star_components"] = r.shape.min_star_components;
  j["shape"] = shape;

  ordered_json brute;
  brute["cograph"] = r.brute.is_power_cograph;
  if (r.brute.witness) brute["witness"] = *r.brute.witness;
  else brute["witness"] = nullptr;
  j["brute"] = brute;

  ordered_json cent;
  cent["cograph"] = r.centralizer.is_power_cograph;
  if (r.centralizer_violation.empty()) cent["violation"] = nullptr;
  else cent["violation"] = r.centralizer_violation;
  j["centralizer"] = cent;

  ordered_json cs;
  cs["theorem"] = to_string(r.assignment.theorem);
  cs["label"] = r.assignment.label;
  cs["data"] = r.assignment.data;
  cs["secondary"] = r.assignment.secondary;
  j["case"] = cs;

  j["agreement"] = r.agreement;

  if (!r.reduced_edges.empty() || r.reduced_vertices <= 2000) {
    ordered_json rg;
    rg["vertices"] = r.reduced_vertices;
    ordered_json redges = ordered_json::array();
    for (auto [a, b] : r.reduced_edges) redges.push_back({a, b});
    rg["edges"] = redges;
    j["reduced_graph"] = rg;
  }

  j["ms"] = r.ms;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "group:          " << r.spec << "\n";
  os << "order:          " << r.order << "\n";
  os << "solvable:       " << (r.solvable ? "yes" : "no") << "\n";
  os << "prime graph:    {";
  for (size_t i = 0; i < r.prime_graph.primes.size(); ++i)
    os << (i ? "," : "") << r.prime_graph.primes[i];
  os << "} edges ";
  if (r.prime_graph.edges.empty()) os << "none";
  for (auto [a, b] : r.prime_graph.edges) os << "{" << a << "," << b << "} ";
  os << "\n";
  os << "shape:          " << graphs::to_string(r.shape.tag);
  if (r.shape.center) os << " center " << *r.shape.center;
  os << "\n";
  os << "brute:          " << (r.brute.is_power_cograph ? "cograph" : "not a cograph");
  if (r.brute.witness) {
    auto& w = *r.brute.witness;
    os << "  witness (" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << ")";
  }
  os << "\n";
  os << "centralizer:    " << (r.centralizer.is_power_cograph ? "cograph" : "not a cograph");
  if (!r.centralizer_violation.empty()) os << "  [" << r.centralizer_violation << "]";
  os << "\n";
  os << "case:           " << to_string(r.assignment.theorem) << " / " << r.assignment.label;
  if (!r.assignment.secondary.empty()) {
    os << " (also";
    for (const auto& s : r.assignment.secondary) os << " " << s;
    os << ")";
  }
  os << "\n";
  if (!r.assignment.data.empty()) os << "case data:      " << r.assignment.data.dump() << "\n";
  os << "agreement:      " << (r.agreement ? "yes" : "NO") << "\n";
  os << "time:           " << r.ms << " ms\n";
  return os.str();
}

}  // namespace poco::classify
