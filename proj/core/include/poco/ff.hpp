#pragma once

#include <cstdint>
#include <vector>

#include "poco/error.hpp"

namespace poco::ff {

// Arithmetic in GF(p^k) with elements in polynomial basis. An element is an
// integer code in [0, p^k): its base-p digits are the coefficients of the
// representing polynomial, lowest degree first. The reducing modulus is the
// lexicographically least monic irreducible polynomial of degree k over
// GF(p), coefficients compared lowest degree first, so the same (p, k)
// always yields the same field.
//
// Field objects are interned and immutable; raw `const Field*` pointers stay
// valid for the lifetime of the process and are safe to share across threads.
class Field {
 public:
  static const Field* get(int64_t p, int k);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  int64_t q() const { return q_; }
  // k+1 coefficients, low degree first, leading coefficient 1.
  const std::vector<int64_t>& modulus() const { return modulus_; }

  int64_t add(int64_t a, int64_t b) const;
  int64_t sub(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;
  int64_t mul(int64_t a, int64_t b) const;
  int64_t inv(int64_t a) const;  // ZeroInverse on a == 0
  int64_t pow(int64_t a, uint64_t n) const;
  // a^(p^times); additive and multiplicative, and the k-fold iterate is id.
  int64_t frobenius(int64_t a, int times = 1) const;

  std::vector<int64_t> coeffs(int64_t code) const;
  int64_t from_coeffs(const std::vector<int64_t>& c) const;

 private:
  Field(int64_t p, int k);

  int64_t mul_generic(int64_t a, int64_t b) const;

  int64_t p_ = 0;
  int k_ = 0;
  int64_t q_ = 0;
  std::vector<int64_t> modulus_;
  std::vector<int64_t> ppow_;       // p^0..p^k
  std::vector<uint32_t> mul_table_; // q*q entries when q is small, else empty
};

// Value-type element carrying its field; convenience wrapper over code-level
// Field methods. Mixing fields in a binary operation raises MixedFields.
struct Elem {
  const Field* f = nullptr;
  int64_t code = 0;

  friend bool operator==(const Elem&, const Elem&) = default;
};

Elem operator+(Elem a, Elem b);
Elem operator-(Elem a, Elem b);
Elem operator*(Elem a, Elem b);
Elem inv(Elem a);
Elem pow(Elem a, uint64_t n);

}  // namespace poco::ff
