#include "poco/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "poco/numth.hpp"

namespace poco::zoo {

using ff::Field;
using grp::Aff;
using grp::Element;
using grp::Group;
using grp::GroupPtr;
using grp::Mat;
using grp::Perm;

namespace {

// ---------------------------------------------------------------------------
// small builders
// ---------------------------------------------------------------------------

Perm perm_identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

// x -> x + 1 (mod len) on the block [base, base+len)
Perm block_shift(int n, int base, int len) {
  Perm p = perm_identity(n);
  for (int i = 0; i < len; ++i) p.img[base + i] = static_cast<uint16_t>(base + (i + 1) % len);
  return p;
}

// x -> a*x (mod len) on the block [base, base+len)
Perm block_mult(int n, int base, int len, int64_t a) {
  Perm p = perm_identity(n);
  for (int i = 0; i < len; ++i) p.img[base + i] = static_cast<uint16_t>(base + (a * i) % len);
  return p;
}

Mat m2(const Field* f, int64_t a, int64_t b, int64_t c, int64_t d) {
  Mat m;
  m.f = f;
  m.dim = 2;
  m.set(0, 0, (uint32_t)a);
  m.set(0, 1, (uint32_t)b);
  m.set(1, 0, (uint32_t)c);
  m.set(1, 1, (uint32_t)d);
  return m;
}

// least element generating the multiplicative group
int64_t field_generator(const Field* f) {
  for (int64_t a = 1; a < f->q(); ++a) {
    int64_t ord = 1, x = a;
    while (x != 1) {
      x = f->mul(x, a);
      ++ord;
    }
    if (ord == f->q() - 1) return a;
  }
  fail(Errc::InvariantViolated, "no multiplicative generator");
}

// a^r with r taken modulo q-1, so negative torus exponents work
int64_t fpow(const Field* f, int64_t a, int64_t r) {
  int64_t m = f->q() - 1;
  r = ((r % m) + m) % m;
  return f->pow(a, static_cast<uint64_t>(r));
}

int64_t checked_mul(int64_t a, int64_t b) {
  if (a != 0 && b > (int64_t{1} << 62) / a)
    fail(Errc::CapExceeded, "advertised order exceeds the representable range");
  return a * b;
}

int64_t factorial(int64_t n) {
  int64_t r = 1;
  for (int64_t i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

void require(bool cond, const std::string& what) {
  if (!cond) fail(Errc::InvalidParameters, what);
}

// the least residue of multiplicative order d modulo the prime p: the least
// primitive root raised to (p-1)/d, so the construction is canonical
int64_t residue_of_order(int64_t p, int64_t d) {
  int64_t g = numth::primitive_root(p);
  int64_t r = 1, e = (p - 1) / d, b = g;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// generator sets
// ---------------------------------------------------------------------------

std::vector<Element> gens_sl2(int64_t q) {
  int64_t p;
  int k;
  numth::is_prime_power(q, &p, &k);
  const Field* f = Field::get(p, k);
  std::vector<Element> gens = {m2(f, 1, 1, 0, 1), m2(f, 1, 0, 1, 1)};
  if (q > 2) {
    int64_t w = field_generator(f);
    gens.push_back(m2(f, w, 0, 0, f->inv(w)));
  }
  return gens;
}

std::vector<Element> gens_gl2(int64_t q) {
  int64_t p;
  int k;
  numth::is_prime_power(q, &p, &k);
  const Field* f = Field::get(p, k);
  auto gens = gens_sl2(q);
  if (q > 2) gens.push_back(m2(f, field_generator(f), 0, 0, 1));
  return gens;
}

// lower unitriangular Suzuki matrix with parameters (a, b); theta is the
// twisting exponent 2^(e+1) on GF(2^(2e+1))
Mat suzuki_s(const Field* f, int64_t theta, int64_t a, int64_t b) {
  Mat m;
  m.f = f;
  m.dim = 4;
  int64_t at = f->pow(a, theta);
  int64_t alpha = f->add(f->mul(a, at), b);
  int64_t beta = f->add(f->add(f->mul(f->mul(a, a), at), f->mul(a, b)), f->pow(b, theta));
  m.set(0, 0, 1);
  m.set(1, 0, (uint32_t)a);
  m.set(1, 1, 1);
  m.set(2, 0, (uint32_t)alpha);
  m.set(2, 1, (uint32_t)at);
  m.set(2, 2, 1);
  m.set(3, 0, (uint32_t)beta);
  m.set(3, 1, (uint32_t)b);
  m.set(3, 2, (uint32_t)a);
  m.set(3, 3, 1);
  return m;
}

std::vector<Element> gens_sz(int64_t q) {
  int64_t p;
  int k;
  numth::is_prime_power(q, &p, &k);
  const Field* f = Field::get(2, k);
  int e = (k - 1) / 2;
  int64_t theta = int64_t{1} << (e + 1);
  int64_t half = int64_t{1} << e;

  int64_t w = field_generator(f);
  Mat torus;
  torus.f = f;
  torus.dim = 4;
  torus.set(0, 0, (uint32_t)fpow(f, w, 1 + half));
  torus.set(1, 1, (uint32_t)fpow(f, w, half));
  torus.set(2, 2, (uint32_t)fpow(f, w, -half));
  torus.set(3, 3, (uint32_t)fpow(f, w, -1 - half));

  Mat weyl;
  weyl.f = f;
  weyl.dim = 4;
  weyl.set(0, 3, 1);
  weyl.set(1, 2, 1);
  weyl.set(2, 1, 1);
  weyl.set(3, 0, 1);

  return {suzuki_s(f, theta, 1, 0), suzuki_s(f, theta, 0, 1), torus, weyl};
}

// the 21 points of the projective plane over GF(4), first-seen normalized
std::vector<std::array<int64_t, 3>> plane_points(const Field* f) {
  std::vector<std::array<int64_t, 3>> points;
  auto normalize = [&](std::array<int64_t, 3> v) {
    for (int i = 0; i < 3; ++i) {
      if (v[i] != 0) {
        int64_t s = f->inv(v[i]);
        for (int j = 0; j < 3; ++j) v[j] = f->mul(v[j], s);
        break;
      }
    }
    return v;
  };
  for (int64_t x = 0; x < f->q(); ++x)
    for (int64_t y = 0; y < f->q(); ++y)
      for (int64_t z = 0; z < f->q(); ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        auto n = normalize({x, y, z});
        if (std::find(points.begin(), points.end(), n) == points.end()) points.push_back(n);
      }
  return points;
}

// SL3(4) transvections acting on the plane; the scalars act trivially so the
// closure is PSL3(4) on 21 points
std::vector<Element> gens_psl3_4() {
  const Field* f = Field::get(2, 2);
  auto points = plane_points(f);
  auto point_index = [&](std::array<int64_t, 3> v) {
    for (int i = 0; i < 3; ++i) {
      if (v[i] != 0) {
        int64_t s = f->inv(v[i]);
        for (int j = 0; j < 3; ++j) v[j] = f->mul(v[j], s);
        break;
      }
    }
    return static_cast<int>(std::find(points.begin(), points.end(), v) - points.begin());
  };

  std::vector<Element> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int64_t lambda : {int64_t{1}, int64_t{2}}) {
        Perm perm;
        perm.img.resize(points.size());
        for (size_t pt = 0; pt < points.size(); ++pt) {
          std::array<int64_t, 3> w = points[pt];
          w[i] = f->add(w[i], f->mul(lambda, points[pt][j]));
          perm.img[pt] = static_cast<uint16_t>(point_index(w));
        }
        gens.push_back(perm);
      }
    }
  return gens;
}

// M10 on the projective line over GF(9): Moebius maps generating the simple
// part plus the semilinear map x -> eps * x^3 for a non-square eps
std::vector<Element> gens_m10() {
  const Field* f = Field::get(3, 2);
  const int64_t q = 9;
  const int INF = 9;

  auto moebius = [&](int64_t a, int64_t b, int64_t c, int64_t d) {
    Perm p;
    p.img.resize(10);
    for (int64_t x = 0; x < q; ++x) {
      int64_t num = f->add(f->mul(a, x), b);
      int64_t den = f->add(f->mul(c, x), d);
      p.img[x] = den == 0 ? INF : static_cast<uint16_t>(f->mul(num, f->inv(den)));
    }
    p.img[INF] = c == 0 ? INF : static_cast<uint16_t>(f->mul(a, f->inv(c)));
    return p;
  };

  int64_t iota = f->from_coeffs({0, 1});
  int64_t eps = f->add(1, iota);  // non-square in GF(9)
  Perm semilinear;
  semilinear.img.resize(10);
  for (int64_t x = 0; x < q; ++x)
    semilinear.img[x] = static_cast<uint16_t>(f->mul(eps, f->frobenius(x)));
  semilinear.img[INF] = INF;

  return {moebius(1, 1, 0, 1), moebius(1, iota, 0, 1), moebius(0, f->neg(1), 1, 0), semilinear};
}

std::vector<Element> gens_natmod(int64_t q) {
  int64_t p;
  int k;
  numth::is_prime_power(q, &p, &k);
  const Field* f = Field::get(2, k);
  std::vector<Element> gens;
  Aff shift;
  shift.a = grp::mat_identity(f, 2);
  shift.v = {1, 0, 0, 0};
  gens.push_back(shift);
  for (const Element& g : gens_sl2(q)) {
    Aff a;
    a.a = std::get<Mat>(g);
    gens.push_back(a);
  }
  return gens;
}

std::vector<Element> gens_heis3() {
  const Field* f = Field::get(3, 1);
  Mat x;
  x.f = f;
  x.dim = 3;
  for (int i = 0; i < 3; ++i) x.set(i, i, 1);
  Mat y = x;
  x.set(0, 1, 1);
  y.set(1, 2, 1);
  return {x, y};
}

// ---------------------------------------------------------------------------
// family table
// ---------------------------------------------------------------------------

struct FamilyInfo {
  const char* name;
  int arity;
};

const FamilyInfo kFamilies[] = {
    {"cyclic", 1}, {"dihedral", 1}, {"quat", 1}, {"sym", 1},    {"alt", 1},  {"heis3", 0},
    {"heis3xC2", 0}, {"sdpq", 3},   {"frob2", 4}, {"frob4", 4}, {"sl2", 1},  {"psl2", 1},
    {"pgl2", 1},   {"sz", 1},       {"psl3_4", 0}, {"m10", 0},  {"natmod", 1},
};

const FamilyInfo* find_family(const std::string& name) {
  for (const auto& fam : kFamilies)
    if (name == fam.name) return &fam;
  return nullptr;
}

GroupPtr generate_checked(const std::vector<Element>& gens, int64_t cap, int64_t expect,
                          const std::string& what) {
  GroupPtr G = Group::generate(gens, cap);
  if (G->order64() != expect)
    fail(Errc::InvariantViolated, what + ": enumerated order " + std::to_string(G->order64()) +
                                      ", expected " + std::to_string(expect));
  return G;
}

}  // namespace

std::vector<std::string> families() {
  std::vector<std::string> out;
  for (const auto& fam : kFamilies) out.push_back(fam.name);
  return out;
}

GroupSpec parse(const std::string& s) {
  GroupSpec spec;
  spec.text = s;
  auto colon = s.find(':');
  spec.family = s.substr(0, colon);
  const FamilyInfo* fam = find_family(spec.family);
  if (!fam) fail(Errc::InvalidParameters, "unknown family '" + spec.family + "'");
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        int64_t v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        spec.params.push_back(v);
      } catch (const std::exception&) {
        fail(Errc::InvalidParameters, "bad parameter '" + tok + "' in '" + s + "'");
      }
    }
  }
  if (static_cast<int>(spec.params.size()) != fam->arity)
    fail(Errc::InvalidParameters, spec.family + " takes " + std::to_string(fam->arity) +
                                      " parameter(s), got " + std::to_string(spec.params.size()));
  return spec;
}

int64_t advertised_order(const GroupSpec& spec) {
  const auto& P = spec.params;
  const std::string& F = spec.family;

  if (F == "cyclic") {
    require(P[0] >= 1, "cyclic:n needs n >= 1");
    return P[0];
  }
  if (F == "dihedral") {
    require(P[0] >= 1, "dihedral:n needs n >= 1");
    return checked_mul(2, P[0]);
  }
  if (F == "quat") {
    int64_t m = P[0];
    require(m >= 8 && (m & (m - 1)) == 0, "quat:m needs m a power of two, m >= 8");
    return m;
  }
  if (F == "sym") {
    require(P[0] >= 1 && P[0] <= 20, "sym:n needs 1 <= n <= 20");
    return factorial(P[0]);
  }
  if (F == "alt") {
    require(P[0] >= 3 && P[0] <= 20, "alt:n needs 3 <= n <= 20");
    return factorial(P[0]) / 2;
  }
  if (F == "heis3") return 27;
  if (F == "heis3xC2") return 54;
  if (F == "sdpq") {
    int64_t p = P[0], q = P[1], n = P[2];
    require(numth::is_prime(p) && numth::is_prime(q), "sdpq:p,q,n needs primes p and q");
    require(p != q, "sdpq:p,q,n needs p != q");
    require(n >= 0, "sdpq:p,q,n needs n >= 0");
    int64_t qn = 1;
    for (int64_t i = 0; i < n; ++i) qn = checked_mul(qn, q);
    require((p - 1) % qn == 0, "sdpq:p,q,n needs q^n to divide p-1");
    return checked_mul(p, checked_mul(qn, q));
  }
  if (F == "frob2") {
    int64_t p = P[0], q = P[1], r = P[2], n = P[3];
    require(numth::is_prime(p) && numth::is_prime(q) && numth::is_prime(r),
            "frob2:p,q,r,n needs primes p, q, r");
    require(p != q && p != r && q != r, "frob2:p,q,r,n needs distinct primes");
    require(n >= 1, "frob2:p,q,r,n needs n >= 1");
    int64_t rn = 1;
    for (int64_t i = 0; i < n; ++i) rn = checked_mul(rn, r);
    require((p - 1) % rn == 0 && (q - 1) % rn == 0,
            "frob2:p,q,r,n needs r^n to divide both p-1 and q-1");
    return checked_mul(checked_mul(p, q), rn);
  }
  if (F == "frob4") {
    int64_t r = P[0], s = P[1], p = P[2], q = P[3];
    require(numth::is_prime(r) && numth::is_prime(s) && numth::is_prime(p) && numth::is_prime(q),
            "frob4:r,s,p,q needs four primes");
    require(r != s && p != q && r != p && r != q && s != p && s != q,
            "frob4:r,s,p,q needs distinct primes");
    int64_t pq = checked_mul(p, q);
    require((r - 1) % pq == 0 && (s - 1) % pq == 0,
            "frob4:r,s,p,q needs pq to divide both r-1 and s-1");
    return checked_mul(checked_mul(r, s), pq);
  }
  if (F == "sl2" || F == "psl2" || F == "pgl2") {
    int64_t q = P[0], p = 0;
    int k = 0;
    require(q >= 2 && numth::is_prime_power(q, &p, &k), F + ":q needs a prime power q >= 2");
    int64_t base = checked_mul(q, checked_mul(q - 1, q + 1));
    if (F == "sl2" || F == "pgl2") return base;
    return p == 2 ? base : base / 2;
  }
  if (F == "sz") {
    int64_t q = P[0], p = 0;
    int k = 0;
    require(numth::is_prime_power(q, &p, &k) && p == 2 && k % 2 == 1 && k >= 3,
            "sz:q needs q = 2^(2e+1) with e >= 1");
    require(q <= 32, "sz:q is exposed for q in {8, 32}");
    return checked_mul(checked_mul(q, q), checked_mul(q * q + 1, q - 1));
  }
  if (F == "psl3_4") return 20160;
  if (F == "m10") return 720;
  if (F == "natmod") {
    int64_t q = P[0], p = 0;
    int k = 0;
    require(numth::is_prime_power(q, &p, &k) && p == 2 && q >= 4,
            "natmod:q needs q = 2^n with n >= 2");
    return checked_mul(checked_mul(q, q), checked_mul(q, q * q - 1));
  }
  fail(Errc::InvalidParameters, "unknown family '" + F + "'");
}

GroupPtr build(const GroupSpec& spec, int64_t cap) {
  const int64_t expect = advertised_order(spec);
  if (expect > cap)
    fail(Errc::CapExceeded, spec.text + " has order " + std::to_string(expect) +
                                " above the cap " + std::to_string(cap));
  const auto& P = spec.params;
  const std::string& F = spec.family;

  if (F == "cyclic") {
    int n = static_cast<int>(P[0]);
    return generate_checked({block_shift(n, 0, n)}, cap, expect, spec.text);
  }
  if (F == "dihedral") {
    int n = static_cast<int>(P[0]);
    if (n == 1) return generate_checked({block_shift(2, 0, 2)}, cap, expect, spec.text);
    if (n == 2)
      return generate_checked({block_shift(4, 0, 2), block_shift(4, 2, 2)}, cap, expect,
                              spec.text);
    Perm refl = perm_identity(n);
    for (int i = 0; i < n; ++i) refl.img[i] = static_cast<uint16_t>((n - i) % n);
    return generate_checked({block_shift(n, 0, n), refl}, cap, expect, spec.text);
  }
  if (F == "quat") {
    int64_t m = P[0], half = m / 2;
    int64_t p = 3;
    while (!numth::is_prime(p) || (p - 1) % half != 0) ++p;
    const Field* f = Field::get(p, 1);
    int64_t zeta = residue_of_order(p, half);
    return generate_checked({m2(f, zeta, 0, 0, f->inv(zeta)), m2(f, 0, 1, p - 1, 0)}, cap, expect,
                            spec.text);
  }
  if (F == "sym") {
    int n = static_cast<int>(P[0]);
    if (n == 1) return generate_checked({perm_identity(1)}, cap, expect, spec.text);
    return generate_checked({block_shift(n, 0, 2), block_shift(n, 0, n)}, cap, expect, spec.text);
  }
  if (F == "alt") {
    int n = static_cast<int>(P[0]);
    Perm three = perm_identity(n);
    three.img[0] = 1;
    three.img[1] = 2;
    three.img[2] = 0;
    Perm big = n % 2 == 1 ? block_shift(n, 0, n) : block_shift(n, 1, n - 1);
    return generate_checked({three, big}, cap, expect, spec.text);
  }
  if (F == "heis3") return generate_checked(gens_heis3(), cap, expect, spec.text);
  if (F == "heis3xC2") {
    // right regular action of H3:2 on its 54 elements. The involution sends
    // the unitriangular coordinates (a, b, c) to (a, -b, -c): it fixes one
    // standard generator and inverts the other together with the center,
    // which is the extension whose order-3 centralizers reach order 18.
    GroupPtr h3 = generate_checked(gens_heis3(), 27, 27, "heis3");
    const Field* f = Field::get(3, 1);
    auto coords = [&](int i) {
      const Mat& m = std::get<Mat>(h3->element(i));
      return std::array<int64_t, 3>{m.at(0, 1), m.at(1, 2), m.at(0, 2)};
    };
    auto index_of = [&](std::array<int64_t, 3> abc) {
      for (int i = 0; i < 27; ++i)
        if (coords(i) == abc) return i;
      fail(Errc::InvariantViolated, "heis3 coordinate lookup failed");
    };

    std::vector<Element> gens;
    for (int gi : h3->generator_indices()) {
      auto abc = coords(gi);
      int beta_gi = index_of({abc[0], f->neg(abc[1]), f->neg(abc[2])});
      Perm perm;
      perm.img.resize(54);
      for (int i = 0; i < 27; ++i) {
        perm.img[i] = static_cast<uint16_t>(h3->mul(i, gi));
        perm.img[27 + i] = static_cast<uint16_t>(27 + h3->mul(i, beta_gi));
      }
      gens.push_back(perm);
    }
    Perm swap;
    swap.img.resize(54);
    for (int i = 0; i < 27; ++i) {
      swap.img[i] = static_cast<uint16_t>(27 + i);
      swap.img[27 + i] = static_cast<uint16_t>(i);
    }
    gens.push_back(swap);
    return generate_checked(gens, cap, expect, spec.text);
  }
  if (F == "sdpq") {
    int64_t p = P[0], q = P[1], n = P[2];
    int64_t qn = 1;
    for (int64_t i = 0; i < n; ++i) qn *= q;
    int np = static_cast<int>(p + q);
    std::vector<Element> gens = {block_shift(np, 0, static_cast<int>(p)),
                                 block_shift(np, static_cast<int>(p), static_cast<int>(q))};
    if (n > 0) gens.push_back(block_mult(np, 0, static_cast<int>(p), residue_of_order(p, qn)));
    return generate_checked(gens, cap, expect, spec.text);
  }
  if (F == "frob2") {
    int64_t p = P[0], q = P[1], r = P[2], n = P[3];
    int64_t rn = 1;
    for (int64_t i = 0; i < n; ++i) rn *= r;
    int np = static_cast<int>(p + q);
    Perm act = perm_identity(np);
    Perm mp = block_mult(np, 0, static_cast<int>(p), residue_of_order(p, rn));
    Perm mq = block_mult(np, static_cast<int>(p), static_cast<int>(q), residue_of_order(q, rn));
    for (int i = 0; i < np; ++i) act.img[i] = i < p ? mp.img[i] : mq.img[i];
    return generate_checked({block_shift(np, 0, static_cast<int>(p)),
                             block_shift(np, static_cast<int>(p), static_cast<int>(q)), act},
                            cap, expect, spec.text);
  }
  if (F == "frob4") {
    int64_t r = P[0], s = P[1], p = P[2], q = P[3];
    int64_t pq = p * q;
    int np = static_cast<int>(r + s);
    Perm act = perm_identity(np);
    Perm mr = block_mult(np, 0, static_cast<int>(r), residue_of_order(r, pq));
    Perm ms = block_mult(np, static_cast<int>(r), static_cast<int>(s), residue_of_order(s, pq));
    for (int i = 0; i < np; ++i) act.img[i] = i < r ? mr.img[i] : ms.img[i];
    return generate_checked({block_shift(np, 0, static_cast<int>(r)),
                             block_shift(np, static_cast<int>(r), static_cast<int>(s)), act},
                            cap, expect, spec.text);
  }
  if (F == "sl2") return generate_checked(gens_sl2(P[0]), cap, expect, spec.text);
  if (F == "psl2") {
    int64_t q = P[0], p = 0;
    int k = 0;
    numth::is_prime_power(q, &p, &k);
    int64_t sl2_order = q * (q * q - 1);
    GroupPtr sl = generate_checked(gens_sl2(q), sl2_order, sl2_order, spec.text);
    if (p == 2) return sl;  // trivial center
    const Field* f = Field::get(p, k);
    Mat neg = m2(f, p - 1, 0, 0, p - 1);
    int neg_idx = -1;
    for (int i = 0; i < sl->order(); ++i)
      if (std::get<Mat>(sl->element(i)) == neg) {
        neg_idx = i;
        break;
      }
    if (neg_idx < 0) fail(Errc::InvariantViolated, "-I not found in SL2");
    GroupPtr psl = grp::quotient(sl, grp::closure(*sl, {neg_idx}));
    if (psl->order64() != expect)
      fail(Errc::InvariantViolated, spec.text + ": center quotient has the wrong order");
    return psl;
  }
  if (F == "pgl2") {
    int64_t q = P[0], p = 0;
    int k = 0;
    numth::is_prime_power(q, &p, &k);
    if (q == 2) return generate_checked(gens_sl2(2), cap, expect, spec.text);
    int64_t gl2_order = q * (q - 1) * (q * q - 1);
    GroupPtr gl = generate_checked(gens_gl2(q), gl2_order, gl2_order, spec.text);
    const Field* f = Field::get(p, k);
    Mat scalar = m2(f, field_generator(f), 0, 0, field_generator(f));
    int sc_idx = -1;
    for (int i = 0; i < gl->order(); ++i)
      if (std::get<Mat>(gl->element(i)) == scalar) {
        sc_idx = i;
        break;
      }
    if (sc_idx < 0) fail(Errc::InvariantViolated, "scalar matrix not found in GL2");
    GroupPtr pgl = grp::quotient(gl, grp::closure(*gl, {sc_idx}));
    if (pgl->order64() != expect)
      fail(Errc::InvariantViolated, spec.text + ": scalar quotient has the wrong order");
    return pgl;
  }
  if (F == "sz") return generate_checked(gens_sz(P[0]), cap, expect, spec.text);
  if (F == "psl3_4") return generate_checked(gens_psl3_4(), cap, expect, spec.text);
  if (F == "m10") {
    GroupPtr G = generate_checked(gens_m10(), cap, expect, spec.text);
    // validate instead of trusting the construction
    std::vector<uint8_t> hit(10, 0);
    for (int i = 0; i < G->order(); ++i) hit[std::get<Perm>(G->element(i)).img[0]] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != 10)
      fail(Errc::InvariantViolated, "m10: action is not point-transitive");
    if (grp::socle(*G).order() != 360) fail(Errc::InvariantViolated, "m10: socle order is not 360");
    if (grp::center(*G).order() != 1) fail(Errc::InvariantViolated, "m10: center is not trivial");
    return G;
  }
  if (F == "natmod") return generate_checked(gens_natmod(P[0]), cap, expect, spec.text);
  fail(Errc::InvalidParameters, "unknown family '" + F + "'");
}

// ---------------------------------------------------------------------------
// invariant verification
// ---------------------------------------------------------------------------

namespace {

struct Checker {
  InvariantReport report;
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    report.checks.push_back(name + (ok ? ": ok" : ": FAIL " + detail));
    if (!ok) {
      report.ok = false;
      report.failures.push_back(name);
    }
  }
};

std::vector<int64_t> distinct_orders(const Group& G) {
  std::vector<int64_t> out;
  for (auto [o, c] : grp::order_spectrum(G)) {
    (void)c;
    out.push_back(o);
  }
  return out;
}

bool orders_within(const Group& G, std::vector<int64_t> allowed) {
  for (int64_t o : distinct_orders(G))
    if (std::find(allowed.begin(), allowed.end(), o) == allowed.end()) return false;
  return true;
}

}  // namespace

InvariantReport verify_spec_invariants(const GroupSpec& spec, GroupPtr G) {
  Checker c;
  const auto& P = spec.params;
  const std::string& F = spec.family;

  c.check("advertised order", G->order64() == advertised_order(spec),
          "got " + std::to_string(G->order64()));

  if (F == "sdpq") {
    int64_t p = P[0], q = P[1], n = P[2];
    const auto& gi = G->generator_indices();
    grp::Subgroup cp = grp::closure(*G, {gi[0]});
    c.check("kernel has order p", cp.order() == p);
    grp::Subgroup cq = grp::closure(*G, {gi[1]});
    c.check("direct factor is central", [&] {
      for (int x : cq.elems)
        for (int g : gi)
          if (G->mul(x, g) != G->mul(g, x)) return false;
      return true;
    }());
    if (n > 0) {
      int64_t qn = 1;
      for (int64_t i = 0; i < n; ++i) qn *= q;
      grp::Subgroup act = grp::closure(*G, {gi[2]});
      c.check("complement is cyclic of order q^n", act.order() == qn);
      c.check("action is fixed-point-free", grp::is_fpf_action(*G, cp, act));
    }
  }
  if (F == "frob2" || F == "frob4") {
    const auto& gi = G->generator_indices();
    grp::Subgroup kernel = grp::closure(*G, {gi[0], gi[1]});
    grp::Subgroup act = grp::closure(*G, {gi[2]});
    c.check("kernel has the advertised order", kernel.order() == P[0] * P[1]);
    c.check("kernel is cyclic", [&] {
      for (int x : kernel.elems)
        if (G->order_of(x) == kernel.order()) return true;
      return false;
    }());
    c.check("action is fixed-point-free", grp::is_fpf_action(*G, kernel, act));
  }
  if (F == "sz" && P[0] == 8) {
    c.check("simple", grp::is_simple(*G));
    c.check("element orders within {1,2,4,5,7,13}", orders_within(*G, {1, 2, 4, 5, 7, 13}));
  }
  if (F == "psl3_4") {
    c.check("simple", grp::is_simple(*G));
    c.check("no element of order 15", orders_within(*G, {1, 2, 3, 4, 5, 7}));
  }
  if (F == "m10") {
    c.check("socle order 360", grp::socle(*G).order() == 360);
    c.check("every element has prime power order", [&] {
      for (int64_t o : distinct_orders(*G))
        if (o > 1 && numth::order_class(o) != numth::OrderClass::PRIME_POWER) return false;
      return true;
    }());
  }
  if (F == "heis3xC2") {
    // an order-3 element whose centralizer has order 18, is nonabelian, and
    // carries a normal subgroup of order 3
    bool found = false;
    for (int i = 1; i < G->order() && !found; ++i) {
      if (G->order_of(i) != 3) continue;
      grp::Subgroup cent = grp::centralizer(*G, i);
      if (cent.order() != 18 || grp::is_abelian_subgroup(*G, cent)) continue;
      for (int z : cent.elems) {
        if (G->order_of(z) != 3) continue;
        grp::Subgroup n3 = grp::closure(*G, {z});
        bool normal = true;
        for (int h : cent.elems)
          if (!n3.contains(G->conj(h, z))) {
            normal = false;
            break;
          }
        if (normal) {
          found = true;
          break;
        }
      }
    }
    c.check("order-3 element with nonabelian order-18 centralizer", found);
  }
  if (F == "natmod") {
    int64_t q = P[0];
    grp::Subgroup o2 = grp::p_radical(*G, 2);
    c.check("O_2 has order q^2", o2.order() == q * q);
    c.check("O_2 elementary abelian", [&] {
      if (!grp::is_abelian_subgroup(*G, o2)) return false;
      for (int x : o2.elems)
        if (x != 0 && G->order_of(x) != 2) return false;
      return true;
    }());
    GroupPtr T = grp::quotient(G, o2);
    c.check("quotient has SL2(q) order", T->order64() == q * (q * q - 1));
    auto mins = grp::minimal_normal_subgroups(*G);
    c.check("minimal normal subgroups are natural-module sized", [&] {
      if (mins.empty()) return false;
      for (const auto& m : mins)
        if (m.order() != q * q) return false;
      return true;
    }());
    c.check("odd-order elements act without fixed vectors", [&] {
      for (const auto& cls : grp::prime_order_classes(*G)) {
        int rep = cls[0];
        if (G->order_of(rep) == 2) continue;
        for (int x : o2.elems)
          if (x != 0 && G->conj(rep, x) == x) return false;
      }
      return true;
    }());
  }
  if (F == "quat") {
    int involutions = 0;
    for (int i = 1; i < G->order(); ++i)
      if (G->order_of(i) == 2) ++involutions;
    c.check("unique involution", involutions == 1);
  }

  return c.report;
}

}  // namespace poco::zoo
