#pragma once

// Integer helpers shared by every module: a wide integer type, exact
// rationals, and the small amount of 64-bit modular arithmetic the scanners
// need on their hot paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "glk/error.hpp"

namespace glk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline BigInt ipow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

/// Remainder in [0, n) for any sign of x.
inline BigInt mod_floor(const BigInt& x, const BigInt& n) {
  BigInt r = x % n;
  if (r < 0) r += n;
  return r;
}

inline i64 mod_floor(i64 x, i64 n) {
  i64 r = x % n;
  return r < 0 ? r + n : r;
}

inline u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

inline u64 pow_mod(u64 base, u64 exp, u64 n) {
  u64 r = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1u) r = mul_mod(r, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1u;
  }
  return r;
}

inline BigInt pow_mod(BigInt base, BigInt exp, const BigInt& n) {
  return boost::multiprecision::powm(mod_floor(base, n), exp, n);
}

/// Inverse of a modulo n; throws NotInvertible when gcd(a, n) != 1.
inline BigInt inverse_mod(const BigInt& a, const BigInt& n) {
  BigInt old_r = mod_floor(a, n), r = n;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(ErrorCode::NotInvertible, "element is not a unit modulo " + n.str());
  return mod_floor(old_s, n);
}

inline u64 inverse_mod(u64 a, u64 n) {
  return static_cast<u64>(inverse_mod(BigInt(a), BigInt(n)));
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace glk
