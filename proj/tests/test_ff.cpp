#include <cstdint>
#include <vector>

#include "doctest.h"
#include "poco/ff.hpp"
#include "poco/numth.hpp"

using poco::Errc;
using poco::Error;
using poco::ff::Field;

namespace {

// ---- test-side polynomial oracle, independent of the Field internals ----

using Poly = std::vector<int64_t>;

int odeg(const Poly& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

Poly omul(const Poly& a, const Poly& b, int64_t p) {
  Poly r(a.size() + b.size() + 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

// long-division remainder by a monic modulus
Poly omod(Poly a, const Poly& m, int64_t p) {
  int dm = odeg(m);
  for (int da = odeg(a); da >= dm; da = odeg(a)) {
    int64_t c = a[da];
    for (int i = 0; i <= dm; ++i)
      a[da - dm + i] = ((a[da - dm + i] - c * m[i]) % p + p) % p;
  }
  a.resize(dm > 0 ? dm : 1, 0);
  return a;
}

bool ohas_root(const Poly& f, int64_t p) {
  for (int64_t x = 0; x < p; ++x) {
    int64_t v = 0, xp = 1;
    for (int64_t c : f) {
      v = (v + c * xp) % p;
      xp = xp * x % p;
    }
    if (v == 0) return true;
  }
  return false;
}

// extended Euclid in GF(p)[x]: returns u with u*a = 1 (mod m), for monic m
// and a invertible. Invariant: t_i * a = r_i (mod m).
Poly oextgcd_inv(Poly a, Poly m, int64_t p) {
  auto inv_scalar = [&](int64_t v) {
    int64_t r = 1, b = ((v % p) + p) % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  Poly r0 = m, t0 = {0};
  Poly r1 = omod(a, m, p), t1 = {1};
  while (odeg(r1) >= 0) {
    // divide r0 by r1: r0 = q*r1 + rem
    Poly q(r0.size() + 1, 0);
    Poly rem = r0;
    int d1 = odeg(r1);
    int64_t lc_inv = inv_scalar(r1[d1]);
    for (int d0 = odeg(rem); d0 >= d1; d0 = odeg(rem)) {
      int64_t c = rem[d0] * lc_inv % p;
      q[d0 - d1] = (q[d0 - d1] + c) % p;
      for (int i = 0; i <= d1; ++i)
        rem[d0 - d1 + i] = ((rem[d0 - d1 + i] - c * r1[i]) % p + p) % p;
    }
    Poly t2 = t0;
    Poly qt1 = omul(q, t1, p);
    t2.resize(std::max(t2.size(), qt1.size()), 0);
    for (size_t i = 0; i < qt1.size(); ++i) t2[i] = ((t2[i] - qt1[i]) % p + p) % p;
    r0 = std::move(r1);
    t0 = std::move(t1);
    r1 = std::move(rem);
    t1 = std::move(t2);
  }
  // gcd is r0; for invertible a it is a nonzero constant
  REQUIRE(odeg(r0) == 0);
  int64_t s = inv_scalar(r0[0]);
  for (auto& c : t0) c = c * s % p;
  return omod(t0, m, p);
}

}  // namespace

TEST_CASE("field construction picks the least irreducible modulus") {
  const Field* f2 = Field::get(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus() == std::vector<int64_t>{0, 1});  // x

  // GF(8): enumerate monic cubics over GF(2) low-digit-first and take the
  // first with no linear factor (degree 3: no roots <=> irreducible).
  {
    Poly expected;
    for (int64_t code = 0; code < 8; ++code) {
      Poly f = {code & 1, (code >> 1) & 1, (code >> 2) & 1, 1};
      if (!ohas_root(f, 2)) {
        expected = f;
        break;
      }
    }
    CHECK(expected == Poly{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(Field::get(2, 3)->modulus() == expected);
  }

  const Field* f9 = Field::get(3, 2);
  CHECK(f9->q() == 9);
  // multiplicative group of GF(9) has order 8
  int64_t g = 0;
  for (int64_t a = 1; a < 9; ++a) {
    int ord = 1;
    int64_t x = a;
    while (x != 1) {
      x = f9->mul(x, a);
      ++ord;
    }
    if (ord == 8) g = a;
  }
  CHECK(g != 0);
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::get(4, 1), Error);
  CHECK_THROWS_AS(Field::get(2, 0), Error);
  CHECK_THROWS_AS(Field::get(2, 21), Error);
  CHECK_THROWS_AS(Field::get(3, 13), Error);  // 3^13 > 2^20
}

TEST_CASE("GF(8) products match a long-division oracle") {
  const Field* f = Field::get(2, 3);
  // x * x^2 = x^3 = x + 1 under x^3 + x + 1
  int64_t x = f->from_coeffs({0, 1});
  int64_t x2 = f->from_coeffs({0, 0, 1});
  CHECK(f->mul(x, x2) == f->from_coeffs({1, 1}));

  for (int64_t a = 0; a < 8; ++a) {
    CHECK(f->mul(a, 1) == a);
    CHECK(f->mul(a, 0) == 0);
    for (int64_t b = 0; b < 8; ++b) {
      Poly pa = f->coeffs(a), pb = f->coeffs(b);
      Poly pr = omod(omul(pa, pb, 2), f->modulus(), 2);
      CHECK(f->mul(a, b) == f->from_coeffs(pr));
      CHECK(f->mul(a, b) == f->mul(b, a));
      for (int64_t c = 0; c < 8; ++c) {
        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST_CASE("inverses agree with the extended-Euclid oracle") {
  const Field* f = Field::get(2, 3);
  CHECK(f->inv(1) == 1);
  // inv(x) = x^2 + 1 under x^3 + x + 1
  int64_t x = f->from_coeffs({0, 1});
  Poly oracle = oextgcd_inv({0, 1}, f->modulus(), 2);
  CHECK(f->from_coeffs(oracle) == f->inv(x));
  CHECK(f->inv(x) == f->from_coeffs({1, 0, 1}));

  for (int64_t a = 1; a < 8; ++a) {
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->pow(a, 7) == 1);  // Lagrange in the multiplicative group
  }
  CHECK_THROWS_AS(f->inv(0), Error);

  const Field* f25 = Field::get(5, 2);
  for (int64_t a = 1; a < 25; ++a) {
    Poly o = oextgcd_inv(f25->coeffs(a), f25->modulus(), 5);
    CHECK(f25->inv(a) == f25->from_coeffs(o));
  }
}

TEST_CASE("nonzero elements form a cyclic group (exhaustive for small fields)") {
  // every field used by the group constructions plus a spread of sizes
  std::vector<std::pair<int64_t, int>> specs = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 10}, {2, 12},
      {3, 1}, {3, 2}, {3, 3}, {3, 7}, {5, 1}, {5, 2}, {5, 4},
      {7, 1}, {7, 2}, {11, 1}, {11, 3}, {13, 2}, {23, 1}, {31, 1}};
  for (auto [p, k] : specs) {
    const Field* f = Field::get(p, k);
    REQUIRE(f->q() <= (1 << 12));
    // brute-force a generator
    bool found = false;
    for (int64_t a = 1; a < f->q() && !found; ++a) {
      int64_t ord = 1;
      int64_t x = a;
      while (x != 1) {
        x = f->mul(x, a);
        ++ord;
        REQUIRE(ord <= f->q());
      }
      if (ord == f->q() - 1) found = true;
    }
    CHECK_MESSAGE(found, "no generator in GF(", p, "^", k, ")");
  }
}

TEST_CASE("Frobenius is a field automorphism of order k") {
  for (auto [p, k] : std::vector<std::pair<int64_t, int>>{{2, 3}, {2, 5}, {3, 2}, {5, 2}, {3, 3}}) {
    const Field* f = Field::get(p, k);
    for (int64_t a = 0; a < f->q(); ++a) {
      CHECK(f->frobenius(a, k) == a);
      for (int64_t b = 0; b < f->q(); ++b) {
        CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
        CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
      }
    }
  }
}

TEST_CASE("Suzuki twist: theta(theta(a)) = a^2 on GF(2^(2e+1))") {
  for (int e : {1, 2}) {
    int k = 2 * e + 1;
    const Field* f = Field::get(2, k);
    uint64_t twist = uint64_t{1} << (e + 1);  // theta: a -> a^(2^(e+1))
    for (int64_t a = 0; a < f->q(); ++a) {
      int64_t t = f->pow(a, twist);
      CHECK(f->pow(t, twist) == f->mul(a, a));
    }
  }
}

TEST_CASE("element wrapper enforces matching fields") {
  poco::ff::Elem a{Field::get(2, 3), 3};
  poco::ff::Elem b{Field::get(3, 2), 2};
  CHECK_THROWS_AS((void)(a * b), Error);
  poco::ff::Elem c{Field::get(2, 3), 5};
  CHECK((a + c).code == (3 ^ 5));
}
