#pragma once

#include "glk/core/integer.hpp"

namespace glk {

/// The unique x in [0, n1*n2) with x = a1 mod n1 and x = a2 mod n2.
inline BigInt crt_pair(const BigInt& a1, const BigInt& n1, const BigInt& a2, const BigInt& n2) {
  require(n1 > 0 && n2 > 0, ErrorCode::InvalidArgument, "CRT moduli must be positive");
  require(gcd(n1, n2) == 1, ErrorCode::NonCoprimeModuli, n1.str() + " and " + n2.str() + " share a factor");
  const BigInt r1 = mod_floor(a1, n1);
  const BigInt r2 = mod_floor(a2, n2);
  // x = r1 + n1 * ((r2 - r1) * n1^{-1} mod n2)
  const BigInt t = mod_floor((r2 - r1) * inverse_mod(n1, n2), n2);
  return r1 + n1 * t;
}

}  // namespace glk
