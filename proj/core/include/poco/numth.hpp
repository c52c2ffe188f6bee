#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "poco/error.hpp"

namespace poco::numth {

// Complete factorization with sorted (prime, exponent) pairs. Fully
// deterministic: primality by a fixed Miller-Rabin base set valid below
// 2^64, splitting by trial division then Brent's rho with a fixed
// polynomial and starting point.
struct Factorization {
  int64_t n = 1;
  std::vector<std::pair<int64_t, int>> factors;

  int64_t product() const;
  std::string str() const;  // e.g. "2^2*3"
};

bool is_prime(int64_t n);
Factorization factorize(int64_t n);  // OutOfRange unless 1 <= n < 2^62
int64_t euler_phi(int64_t n);
// true iff n = p^k with k >= 1; fills p and k.
bool is_prime_power(int64_t n, int64_t* p = nullptr, int* k = nullptr);
// least generator of (Z/pZ)^*, p an odd prime (or 2).
int64_t primitive_root(int64_t p);

enum class OrderClass { ONE, PRIME_POWER, TWO_DISTINCT_PRIMES, OTHER };
const char* to_string(OrderClass c);
OrderClass order_class(int64_t n);

// The three admissibility families: PSL2 over odd q >= 5, PSL2 over even
// q >= 4, and Suzuki groups over q = 2^(2e+1) >= 8. For each, the listed
// quantities must all be prime powers or products of two distinct primes.
enum class Family { PSL2_ODD, PSL2_EVEN, SZ };
const char* to_string(Family f);
bool family_from_string(const std::string& s, Family* out);

struct FactorCheck {
  std::string name;   // e.g. "(q-1)/2"
  int64_t value = 0;
  Factorization fac;
  OrderClass cls = OrderClass::OTHER;
  bool ok = false;
};

struct Admissibility {
  Family family;
  int64_t q = 0;
  bool admissible = false;
  std::vector<FactorCheck> parts;
};

Admissibility simple_admissible(Family f, int64_t q);  // BadFamilyParameter
std::vector<Admissibility> scan(Family f, int64_t q_max);  // q_max <= 2^31

nlohmann::ordered_json to_json(const Admissibility& a);
std::string scan_table_text(const std::vector<Admissibility>& rows);

}  // namespace poco::numth
