#pragma once

#include <limits>
#include <random>

#include "glk/core/integer.hpp"

namespace glk {

/// Seeded stand-in for the Chebotarev/disjointness step: every draw of a
/// cocycle value or of a candidate-prime acceptance comes from here.
///
/// mt19937_64 output is fixed by the standard, and bounded draws use plain
/// rejection instead of std::uniform_int_distribution (whose algorithm is
/// implementation-defined), so a seed gives the same stream on every platform.
class SyntheticChebotarev {
 public:
  SyntheticChebotarev(u64 seed, u64 p, Rational density)
      : seed_(seed), p_(p), density_(std::move(density)), engine_(seed) {
    require(is_prime(p), ErrorCode::InvalidArgument, "sampler needs a prime p");
    require(density_ > 0 && density_ <= 1, ErrorCode::InvalidArgument, "density must lie in (0, 1]");
    const BigInt den = boost::multiprecision::denominator(density_);
    require(den <= BigInt(std::numeric_limits<u64>::max()), ErrorCode::InvalidArgument, "density denominator too large");
    num_ = static_cast<u64>(boost::multiprecision::numerator(density_));
    den_ = static_cast<u64>(den);
  }

  u64 seed() const { return seed_; }
  u64 p() const { return p_; }
  const Rational& density() const { return density_; }
  u64 draws() const { return draws_; }

  /// Uniform on [0, n).
  u64 below(u64 n) {
    require(n > 0, ErrorCode::InvalidArgument, "empty range");
    ++draws_;
    const u64 max = std::numeric_limits<u64>::max();
    const u64 limit = max - (max % n + 1) % n;  // largest multiple of n, minus one
    u64 x;
    do x = engine_();
    while (x > limit);
    return x % n;
  }

  u64 residue() { return below(p_); }
  u64 nonzero() { return 1 + below(p_ - 1); }
  bool accept() { return below(den_) < num_; }

 private:
  u64 seed_;
  u64 p_;
  Rational density_;
  u64 num_ = 1;
  u64 den_ = 1;
  std::mt19937_64 engine_;
  u64 draws_ = 0;
};

}  // namespace glk
