#include "poco/numth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace poco::numth {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // fixed base set, deterministic below 2^64
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent-style rho with f(x) = x^2 + c. The start point and the sequence of
// c values are fixed so the factor found for a given n never varies.
u64 rho_split(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 0, xs = x;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power <<= 1;
        lam = 0;
        xs = y;
      }
      // batch gcd in blocks of up to 64 steps
      u64 q = 1;
      u64 steps = std::min<u64>(64, power - lam);
      for (u64 i = 0; i < steps; ++i) {
        y = (mulmod(y, y, n) + c) % n;
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      lam += steps;
      d = gcd_u64(q, n);
    }
    if (d != n) return d;
    // back-track one step at a time from the saved point
    u64 ys = xs;
    d = 1;
    while (d == 1) {
      ys = (mulmod(ys, ys, n) + c) % n;
      d = gcd_u64(x > ys ? x - ys : ys - x, n);
    }
    if (d != n) return d;
    // rare: retry with the next polynomial
  }
}

void factor_rec(u64 n, std::map<int64_t, int>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out[static_cast<int64_t>(n)] += 1;
    return;
  }
  u64 d = rho_split(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(int64_t n) { return n >= 2 && miller_rabin(static_cast<u64>(n)); }

int64_t Factorization::product() const {
  int64_t r = 1;
  for (auto [p, e] : factors)
    for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::string Factorization::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [p, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << p;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

Factorization factorize(int64_t n) {
  if (n < 1 || n >= (int64_t{1} << 62)) fail(Errc::OutOfRange, "factorize(" + std::to_string(n) + ")");
  Factorization f;
  f.n = n;
  u64 m = static_cast<u64>(n);
  std::map<int64_t, int> acc;
  for (u64 p = 2; p < 100 && p * p <= m; ++p) {
    while (m % p == 0) {
      acc[static_cast<int64_t>(p)] += 1;
      m /= p;
    }
  }
  factor_rec(m, acc);
  f.factors.assign(acc.begin(), acc.end());
  return f;
}

int64_t euler_phi(int64_t n) {
  auto f = factorize(n);
  int64_t r = n;
  for (auto [p, e] : f.factors) r = r / p * (p - 1);
  return r;
}

bool is_prime_power(int64_t n, int64_t* p, int* k) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.factors.size() != 1) return false;
  if (p) *p = f.factors[0].first;
  if (k) *k = f.factors[0].second;
  return true;
}

int64_t primitive_root(int64_t p) {
  if (!is_prime(p)) fail(Errc::InvalidParameters, "primitive_root of non-prime");
  if (p == 2) return 1;
  auto f = factorize(p - 1);
  for (int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : f.factors) {
      (void)e;
      if (powmod(static_cast<u64>(g), static_cast<u64>((p - 1) / q), static_cast<u64>(p)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(Errc::InvariantViolated, "no primitive root found");
}

const char* to_string(OrderClass c) {
  switch (c) {
    case OrderClass::ONE: return "ONE";
    case OrderClass::PRIME_POWER: return "PRIME_POWER";
    case OrderClass::TWO_DISTINCT_PRIMES: return "TWO_DISTINCT_PRIMES";
    case OrderClass::OTHER: return "OTHER";
  }
  return "?";
}

OrderClass order_class(int64_t n) {
  if (n < 1) fail(Errc::OutOfRange, "order_class(" + std::to_string(n) + ")");
  if (n == 1) return OrderClass::ONE;
  auto f = factorize(n);
  if (f.factors.size() == 1) return OrderClass::PRIME_POWER;
  if (f.factors.size() == 2 && f.factors[0].second == 1 && f.factors[1].second == 1)
    return OrderClass::TWO_DISTINCT_PRIMES;
  return OrderClass::OTHER;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::PSL2_ODD: return "psl2odd";
    case Family::PSL2_EVEN: return "psl2even";
    case Family::SZ: return "sz";
  }
  return "?";
}

bool family_from_string(const std::string& s, Family* out) {
  if (s == "psl2odd") *out = Family::PSL2_ODD;
  else if (s == "psl2even") *out = Family::PSL2_EVEN;
  else if (s == "sz") *out = Family::SZ;
  else return false;
  return true;
}

namespace {

FactorCheck make_check(const std::string& name, int64_t value) {
  FactorCheck c;
  c.name = name;
  c.value = value;
  c.fac = factorize(value);
  c.cls = order_class(value);
  c.ok = c.cls != OrderClass::OTHER;
  return c;
}

// integer sqrt of a perfect square 2q, for Suzuki parameters
int64_t exact_sqrt(int64_t n) {
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Admissibility simple_admissible(Family f, int64_t q) {
  Admissibility a;
  a.family = f;
  a.q = q;
  int64_t p = 0;
  int k = 0;
  switch (f) {
    case Family::PSL2_ODD:
      if (q < 5 || !is_prime_power(q, &p, &k) || p == 2)
        fail(Errc::BadFamilyParameter, "psl2odd wants an odd prime power q >= 5, got " + std::to_string(q));
      a.parts.push_back(make_check("(q-1)/2", (q - 1) / 2));
      a.parts.push_back(make_check("(q+1)/2", (q + 1) / 2));
      break;
    case Family::PSL2_EVEN:
      if (q < 4 || !is_prime_power(q, &p, &k) || p != 2)
        fail(Errc::BadFamilyParameter, "psl2even wants q = 2^k >= 4, got " + std::to_string(q));
      a.parts.push_back(make_check("q-1", q - 1));
      a.parts.push_back(make_check("q+1", q + 1));
      break;
    case Family::SZ: {
      if (q < 8 || !is_prime_power(q, &p, &k) || p != 2 || k % 2 == 0)
        fail(Errc::BadFamilyParameter, "sz wants q = 2^(2e+1) >= 8, got " + std::to_string(q));
      int64_t s = exact_sqrt(2 * q);
      a.parts.push_back(make_check("q-1", q - 1));
      a.parts.push_back(make_check("q+sqrt(2q)+1", q + s + 1));
      a.parts.push_back(make_check("q-sqrt(2q)+1", q - s + 1));
      break;
    }
  }
  a.admissible = std::all_of(a.parts.begin(), a.parts.end(), [](const FactorCheck& c) { return c.ok; });
  return a;
}

std::vector<Admissibility> scan(Family f, int64_t q_max) {
  if (q_max < 1 || q_max > (int64_t{1} << 31)) fail(Errc::OutOfRange, "scan q_max");
  std::vector<int64_t> qs;
  switch (f) {
    case Family::PSL2_ODD:
      for (int64_t q = 5; q <= q_max; q += 2) {
        int64_t p;
        int k;
        if (is_prime_power(q, &p, &k) && p != 2) qs.push_back(q);
      }
      break;
    case Family::PSL2_EVEN:
      for (int64_t q = 4; q <= q_max && q > 0; q *= 2) qs.push_back(q);
      break;
    case Family::SZ:
      for (int64_t q = 8; q <= q_max && q > 0; q *= 4) qs.push_back(q);
      break;
  }
  std::vector<Admissibility> rows;
  rows.reserve(qs.size());
  for (int64_t q : qs) rows.push_back(simple_admissible(f, q));
  return rows;
}

nlohmann::ordered_json to_json(const Admissibility& a) {
  nlohmann::ordered_json row;
  row["family"] = to_string(a.family);
  row["q"] = a.q;
  row["admissible"] = a.admissible;
  nlohmann::ordered_json parts = nlohmann::ordered_json::object();
  for (const auto& c : a.parts) {
    nlohmann::ordered_json part;
    part["value"] = c.value;
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (auto [p, e] : c.fac.factors) primes.push_back({p, e});
    part["factorization"] = primes;
    part["class"] = to_string(c.cls);
    part["ok"] = c.ok;
    parts[c.name] = part;
  }
  row["factors"] = parts;
  return row;
}

std::string scan_table_text(const std::vector<Admissibility>& rows) {
  std::ostringstream os;
  os << "       q  admissible  breakdown\n";
  for (const auto& a : rows) {
    std::ostringstream breakdown;
    bool first = true;
    for (const auto& c : a.parts) {
      if (!first) breakdown << "  ";
      first = false;
      breakdown << c.name << "=" << c.value << "=" << c.fac.str() << (c.ok ? "" : " [fails]");
    }
    std::string qs = std::to_string(a.q);
    os << std::string(qs.size() >= 8 ? 0 : 8 - qs.size(), ' ') << qs << "  "
       << (a.admissible ? "yes       " : "no        ") << "  " << breakdown.str() << "\n";
  }
  return os.str();
}

}  // namespace poco::numth
