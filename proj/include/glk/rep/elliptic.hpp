#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "glk/core/integer.hpp"
#include "glk/core/primes.hpp"

namespace glk {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
class EllipticCurveSource {
 public:
  EllipticCurveSource(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6) : a_{a1, a2, a3, a4, a6} {
    const BigInt A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
    const BigInt b2 = A1 * A1 + 4 * A2;
    const BigInt b4 = 2 * A4 + A1 * A3;
    const BigInt b6 = A3 * A3 + 4 * A6;
    const BigInt b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
    discriminant_ = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    require(discriminant_ != 0, ErrorCode::InvalidArgument, "singular Weierstrass equation (discriminant 0)");
    factor_discriminant();
  }

  /// Cremona 37a1: y^2 + y = x^3 - x.
  static EllipticCurveSource curve_37a1() { return EllipticCurveSource(0, 0, 1, -1, 0); }

  const std::array<i64, 5>& coefficients() const { return a_; }
  const BigInt& discriminant() const { return discriminant_; }

  /// Prime divisors of the discriminant found by trial division up to the
  /// work bound; a leftover cofactor above the bound is kept as-is.
  const std::vector<BigInt>& conductor_support() const { return bad_primes_; }

  bool has_good_reduction(u64 q) const { return discriminant_ % q != 0; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
    return s;
  }

 private:
  void factor_discriminant() {
    BigInt n = abs(discriminant_);
    const u64 bound = max_prime_bound();
    for (u64 d = 2; d <= bound && BigInt(d) * d <= n; d += (d == 2 ? 1 : 2)) {
      if (n % d == 0) {
        bad_primes_.emplace_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) bad_primes_.push_back(n);
  }

  std::array<i64, 5> a_;
  BigInt discriminant_;
  std::vector<BigInt> bad_primes_;
};

/// a_q = q + 1 - #E(F_q), counting the point at infinity.
///
/// q in {2, 3}: direct enumeration of the long form. Otherwise the equation
/// is completed to (2y + a1 x + a3)^2 = g(x) and affine points are counted
/// from a table of squares mod q, O(q) per prime.
inline i64 ec_point_count(const EllipticCurveSource& curve, u64 q, u64 bound = max_prime_bound()) {
  require(is_prime(q), ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
  require(q <= bound, ErrorCode::LimitExceeded,
          "q = " + std::to_string(q) + " exceeds the point-count bound " + std::to_string(bound));
  require(curve.has_good_reduction(q), ErrorCode::BadReduction,
          std::to_string(q) + " divides the discriminant " + curve.discriminant().str());
  const auto& a = curve.coefficients();
  const i64 qi = static_cast<i64>(q);
  auto r = [qi](i64 v) { return static_cast<u64>(mod_floor(v, qi)); };
  const u64 a1 = r(a[0]), a2 = r(a[1]), a3 = r(a[2]), a4 = r(a[3]), a6 = r(a[4]);

  u64 affine = 0;
  if (q <= 3) {
    for (u64 x = 0; x < q; ++x) {
      for (u64 y = 0; y < q; ++y) {
        const u64 lhs = (y * y + a1 * x * y + a3 * y) % q;
        const u64 rhs = (x * x * x + a2 * x * x + a4 * x + a6) % q;
        if (lhs == rhs) ++affine;
      }
    }
  } else {
    std::vector<unsigned char> square(q, 0);
    for (u64 y = 0; y < q; ++y) square[y * y % q] = 1;
    for (u64 x = 0; x < q; ++x) {
      const u64 x2 = x * x % q;
      const u64 cubic = (x2 * x + a2 * x2 + a4 * x + a6) % q;
      const u64 lin = (a1 * x + a3) % q;
      const u64 g = (4 * cubic + lin * lin) % q;
      affine += g == 0 ? 1 : (square[g] ? 2 : 0);
    }
  }
  const i64 aq = qi + 1 - static_cast<i64>(affine + 1);
  // Hasse: a_q^2 <= 4q.
  if (static_cast<long double>(aq) * aq > 4.0L * static_cast<long double>(q)) {
    fail(ErrorCode::InvalidArgument, "Hasse bound violated at q = " + std::to_string(q) + " (a_q = " + std::to_string(aq) + ")");
  }
  return aq;
}

}  // namespace glk
