#include "poco/ff.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "poco/numth.hpp"

namespace poco::ff {

namespace {

constexpr int64_t kMaxFieldSize = 1 << 20;
constexpr int64_t kMulTableMax = 256;  // build full multiplication table below this

using Poly = std::vector<int64_t>;  // coefficients, low degree first

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, int64_t p) {
  int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) {
    int64_t c = a[da];
    int shift = da - dm;
    for (int i = 0; i <= dm; ++i) a[i + shift] = ((a[i + shift] - c * m[i]) % p + p) % p;
  }
  a.resize(dm > 0 ? dm : 1, 0);
  return a;
}

bool poly_is_zero(const Poly& a) { return degree(a) < 0; }

// Irreducibility by trial division with every monic polynomial of degree
// 1..deg(f)/2; fine at the sizes we ever build (deg <= 20, p^deg <= 2^20).
bool poly_irreducible(const Poly& f, int64_t p) {
  int df = degree(f);
  if (df <= 0) return false;
  if (df == 1) return true;
  for (int d = 1; 2 * d <= df; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int64_t p, int k) : p_(p), k_(k) {
  ppow_.resize(k + 1);
  ppow_[0] = 1;
  for (int i = 1; i <= k; ++i) ppow_[i] = ppow_[i - 1] * p;
  q_ = ppow_[k];

  // Lexicographically least monic irreducible modulus, low-degree digits
  // varying fastest.
  for (int64_t code = 0;; ++code) {
    if (code >= q_) fail(Errc::InvariantViolated, "no irreducible modulus found");
    Poly f(k + 1, 0);
    int64_t c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (poly_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  if (q_ <= kMulTableMax) {
    mul_table_.resize(static_cast<size_t>(q_) * q_);
    for (int64_t a = 0; a < q_; ++a)
      for (int64_t b = 0; b < q_; ++b)
        mul_table_[static_cast<size_t>(a) * q_ + b] = static_cast<uint32_t>(mul_generic(a, b));
  }
}

const Field* Field::get(int64_t p, int k) {
  if (p < 2 || !numth::is_prime(p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
  if (k < 1) fail(Errc::DegreeOutOfRange, "k = " + std::to_string(k));
  // overflow-safe p^k <= 2^20 check
  int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) fail(Errc::DegreeOutOfRange, "p^k exceeds 2^20");
  }

  static std::mutex mu;
  static std::map<std::pair<int64_t, int>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, k}];
  if (!slot) slot.reset(new Field(p, k));
  return slot.get();
}

int64_t Field::add(int64_t a, int64_t b) const {
  if (p_ == 2) return a ^ b;
  int64_t r = 0;
  for (int i = 0; i < k_; ++i) {
    int64_t da = (a / ppow_[i]) % p_;
    int64_t db = (b / ppow_[i]) % p_;
    r += ((da + db) % p_) * ppow_[i];
  }
  return r;
}

int64_t Field::neg(int64_t a) const {
  if (p_ == 2) return a;
  int64_t r = 0;
  for (int i = 0; i < k_; ++i) {
    int64_t d = (a / ppow_[i]) % p_;
    r += ((p_ - d) % p_) * ppow_[i];
  }
  return r;
}

int64_t Field::sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

int64_t Field::mul_generic(int64_t a, int64_t b) const {
  Poly pa(k_, 0), pb(k_, 0);
  for (int i = 0; i < k_; ++i) {
    pa[i] = (a / ppow_[i]) % p_;
    pb[i] = (b / ppow_[i]) % p_;
  }
  Poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  int64_t code = 0;
  for (int i = 0; i < k_ && i < static_cast<int>(r.size()); ++i) code += r[i] * ppow_[i];
  return code;
}

int64_t Field::mul(int64_t a, int64_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
  return mul_generic(a, b);
}

int64_t Field::pow(int64_t a, uint64_t n) const {
  int64_t r = 1;
  int64_t base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

int64_t Field::inv(int64_t a) const {
  if (a == 0) fail(Errc::ZeroInverse, "inverse of zero");
  return pow(a, static_cast<uint64_t>(q_ - 2));
}

int64_t Field::frobenius(int64_t a, int times) const {
  int64_t r = a;
  for (int i = 0; i < times; ++i) r = pow(r, static_cast<uint64_t>(p_));
  return r;
}

std::vector<int64_t> Field::coeffs(int64_t code) const {
  std::vector<int64_t> c(k_);
  for (int i = 0; i < k_; ++i) c[i] = (code / ppow_[i]) % p_;
  return c;
}

int64_t Field::from_coeffs(const std::vector<int64_t>& c) const {
  int64_t code = 0;
  for (int i = 0; i < k_ && i < static_cast<int>(c.size()); ++i)
    code += (((c[i] % p_) + p_) % p_) * ppow_[i];
  return code;
}

namespace {
void check_same(const Elem& a, const Elem& b) {
  if (a.f != b.f) fail(Errc::MixedFields, "operands from different fields");
}
}  // namespace

Elem operator+(Elem a, Elem b) {
  check_same(a, b);
  return {a.f, a.f->add(a.code, b.code)};
}
Elem operator-(Elem a, Elem b) {
  check_same(a, b);
  return {a.f, a.f->sub(a.code, b.code)};
}
Elem operator*(Elem a, Elem b) {
  check_same(a, b);
  return {a.f, a.f->mul(a.code, b.code)};
}
Elem inv(Elem a) { return {a.f, a.f->inv(a.code)}; }
Elem pow(Elem a, uint64_t n) { return {a.f, a.f->pow(a.code, n)}; }

}  // namespace poco::ff
