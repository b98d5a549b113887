#pragma once

#include "glk/core/mat2.hpp"

namespace glk {

/// Multiplicative lift of g (mod p, order prime to p) to Z/p^m.
///
/// With n = ord(g) and f the order of p mod n, x -> x^{p^f} fixes the reduction
/// of g and contracts the fibre above it, so iterating from any lift converges
/// in at most m steps to the lift of order n.
inline Mat2 teichmuller_lift(const Mat2& g, int m) {
  require(g.m() == 1, ErrorCode::PrecisionMismatch, "Teichmuller lift starts from a matrix mod p");
  require(m >= 1, ErrorCode::InvalidArgument, "precision must be positive");
  const u64 p = g.p();
  const auto order = multiplicative_order(g, p * p);
  require(order.has_value(), ErrorCode::InvalidArgument, "order of " + g.str() + " not found");
  const u64 n = *order;
  require(n % p != 0, ErrorCode::OrderDivisibleByP,
          "order " + std::to_string(n) + " of " + g.str() + " is divisible by p");

  u64 f = 1;
  for (u64 x = p % n; n > 1 && x != 1 % n; x = mul_mod(x, p, n)) ++f;
  const BigInt step = ipow(BigInt(p), static_cast<unsigned>(f));

  Mat2 x = g.lift(m);
  for (int it = 0; it <= m + 1; ++it) {
    Mat2 next = x.pow(step);
    if (next == x) break;
    x = std::move(next);
  }
  if (x.reduce(1) != g || !x.pow(BigInt(n)).is_identity()) {
    fail(ErrorCode::InvalidArgument, "Teichmuller iteration did not stabilize for " + g.str());
  }
  return x;
}

}  // namespace glk
