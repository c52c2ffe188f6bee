#pragma once

#include <cstddef>
#include <cstdint>

namespace poco::detail {

// FNV-1a accumulator; used for element hashing and stable list digests.
struct Fnv {
  uint64_t h = 1469598103934665603ull;

  void byte(uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  }
  void bytes(const void* p, size_t n) {
    auto* q = static_cast<const uint8_t*>(p);
    for (size_t i = 0; i < n; ++i) byte(q[i]);
  }
  void u16(uint16_t v) { bytes(&v, sizeof v); }
  void u32(uint32_t v) { bytes(&v, sizeof v); }
  void u64(uint64_t v) { bytes(&v, sizeof v); }
};

}  // namespace poco::detail
