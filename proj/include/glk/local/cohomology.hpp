#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glk/core/integer.hpp"

namespace glk {

/// Dimensions of H^i(G_q, M) for the tame quotient, q != p.
struct LocalDims {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;
  int h1_nr = 0;

  LocalDims& operator+=(const LocalDims& o) {
    h0 += o.h0;
    h1 += o.h1;
    h2 += o.h2;
    h1_nr += o.h1_nr;
    return *this;
  }
  bool operator==(const LocalDims&) const = default;
};

namespace detail {

/// q^i mod p for any integer i (q a unit mod p).
inline u64 signed_pow_mod(u64 q, int i, u64 p) {
  const u64 base = i >= 0 ? q % p : inverse_mod(q % p, p);
  return pow_mod(base, static_cast<u64>(i >= 0 ? i : -i), p);
}

}  // namespace detail

/// Cohomology of F_p(i) over Q_q: h0 = [q^i = 1], h2 = [q^{i-1} = 1] by local
/// duality, and h1 = h0 + h2 because the tame Euler characteristic vanishes.
inline LocalDims twist_dims(u64 q, u64 p, int i) {
  require(q != p, ErrorCode::EqualPrimes, "local cohomology at q = p is wild");
  require(is_prime(q) && is_prime(p), ErrorCode::InvalidArgument, "q and p must be prime");
  LocalDims d;
  d.h0 = detail::signed_pow_mod(q, i, p) == 1 % p ? 1 : 0;
  d.h2 = detail::signed_pow_mod(q, i - 1, p) == 1 % p ? 1 : 0;
  d.h1 = d.h0 + d.h2;
  d.h1_nr = d.h0;
  return d;
}

/// A G_q-module written as a direct sum of Tate twists F_p(i).
struct TameModuleShape {
  std::vector<int> summands;
  u64 q;
  u64 p;

  LocalDims dims() const {
    LocalDims total;
    for (int i : summands) total += twist_dims(q, p, i);
    return total;
  }
};

/// Ad^0 at a nice prime splits as F_p + F_p(1) + F_p(-1); its Cartier dual
/// Ad^0(1) as F_p(1) + F_p + F_p(2).
inline TameModuleShape ad0_shape(u64 q, u64 p) { return {{0, 1, -1}, q, p}; }
inline TameModuleShape ad0_dual_shape(u64 q, u64 p) { return {{1, 0, 2}, q, p}; }

inline bool is_nice_residue(u64 q, u64 p) {
  const u64 r = q % p;
  return r != 1 && r != p - 1;
}

/// (dims for Ad^0, dims for Ad^0(1)) at a prime q with q != +-1 mod p.
inline std::pair<LocalDims, LocalDims> ad0_local_dims(u64 q, u64 p) {
  require(q != p, ErrorCode::EqualPrimes, "local cohomology at q = p is wild");
  require(is_nice_residue(q, p), ErrorCode::NotNiceResidue,
          std::to_string(q) + " = +-1 mod " + std::to_string(p));
  return {ad0_shape(q, p).dims(), ad0_dual_shape(q, p).dims()};
}

}  // namespace glk
