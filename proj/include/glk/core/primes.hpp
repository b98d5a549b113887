#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "glk/core/integer.hpp"

namespace glk {

inline constexpr u64 kDefaultMaxPrime = 1'000'000;

/// Work bound for sieving and point counting; GLK_MAX_PRIME overrides the default.
inline u64 max_prime_bound() {
  if (const char* env = std::getenv("GLK_MAX_PRIME")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return v;
  }
  return kDefaultMaxPrime;
}

namespace detail {

inline std::vector<u64> simple_sieve(u64 limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

}  // namespace detail

/// Primes in [lo, hi], ascending. Segmented over odd numbers.
inline std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);
  if (lo == 2) out.push_back(2);
  const u64 root = static_cast<u64>(std::sqrt(static_cast<long double>(hi))) + 1;
  const std::vector<u64> base = detail::simple_sieve(root);

  constexpr u64 kSegment = 1u << 16;  // odd numbers per segment
  u64 start = std::max<u64>(lo, 3) | 1u;
  std::vector<char> composite(kSegment);
  while (start <= hi) {
    const u64 span_end = std::min<u64>(hi, start + 2 * (kSegment - 1));
    const u64 count = (span_end - start) / 2 + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(count), 0);
    for (std::size_t i = 1; i < base.size(); ++i) {
      const u64 bp = base[i];
      if (bp * bp > span_end) break;
      u64 first = std::max(bp * bp, (start + bp - 1) / bp * bp);
      if ((first & 1u) == 0) first += bp;
      for (u64 j = first; j <= span_end; j += 2 * bp) composite[(j - start) / 2] = 1;
    }
    for (u64 i = 0; i < count; ++i) {
      if (!composite[i]) {
        const u64 v = start + 2 * i;
        if (v > 1) out.push_back(v);
      }
    }
    if (span_end >= hi) break;
    start = span_end + 2;
  }
  return out;
}

/// Exactly the primes <= limit, ascending.
inline std::vector<u64> prime_sieve(u64 limit) {
  require(limit >= 2, ErrorCode::InvalidArgument, "prime_sieve limit must be >= 2");
  return primes_in_range(2, limit);
}

inline u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace glk
