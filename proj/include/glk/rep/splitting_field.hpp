#pragma once

#include <string>
#include <vector>

#include "glk/core/integer.hpp"
#include "glk/core/poly_fp.hpp"

namespace glk {

namespace detail {

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Sylvester resultant of two polynomials given highest degree first.
inline BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t dim = m + n;
  std::vector<std::vector<BigInt>> s(dim, std::vector<BigInt>(dim, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[j];
  return bareiss_det(std::move(s));
}

}  // namespace detail

/// Integer polynomial whose splitting field carries the residual image.
class SplittingFieldSource {
 public:
  /// Monic, integer coefficients, highest degree first.
  explicit SplittingFieldSource(std::vector<BigInt> desc) : desc_(std::move(desc)) {
    require(desc_.size() >= 2, ErrorCode::InvalidArgument, "polynomial must have degree >= 1");
    require(desc_.front() == 1, ErrorCode::InvalidArgument, "polynomial must be monic");
    compute_discriminant();
    require(discriminant_ != 0, ErrorCode::InvalidArgument, "polynomial has a repeated root (discriminant 0)");
    require(!has_rational_root(), ErrorCode::Reducible, "polynomial has a rational root");
  }

  /// The degree-7 polynomial of Zeh-Marschke with Galois group PSL_2(F_7).
  static SplittingFieldSource zeh_marschke() {
    return SplittingFieldSource({1, -22, 141, -204, -428, 768, 320, -512});
  }

  const std::vector<BigInt>& coefficients() const { return desc_; }
  int degree() const { return static_cast<int>(desc_.size()) - 1; }
  const BigInt& discriminant() const { return discriminant_; }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (const auto& c : desc_) acc = acc * x + c;
    return acc;
  }

  /// Monic integer polynomial: rational roots are divisors of the constant term.
  bool has_rational_root() const {
    const BigInt c = abs(desc_.back());
    if (c == 0) return degree() > 0;
    if (c > BigInt(max_divisor_scan)) return false;  // spot check only
    const u64 cv = static_cast<u64>(c);
    for (u64 d = 1; d <= cv; ++d) {
      if (cv % d) continue;
      if (eval(BigInt(d)) == 0 || eval(-BigInt(d)) == 0) return true;
    }
    return false;
  }

  PolyOverFp reduce_mod(u64 q) const { return PolyOverFp::from_integers_desc(q, desc_); }

 private:
  static constexpr u64 max_divisor_scan = 10'000'000;

  void compute_discriminant() {
    const std::size_t n = desc_.size() - 1;
    std::vector<BigInt> deriv;
    for (std::size_t i = 0; i < n; ++i) deriv.push_back(desc_[i] * static_cast<unsigned>(n - i));
    BigInt res = n == 1 ? BigInt(1) : detail::resultant(desc_, deriv);
    if ((n * (n - 1) / 2) % 2 == 1) res = -res;
    discriminant_ = res / desc_.front();
  }

  std::vector<BigInt> desc_;
  BigInt discriminant_;
};

/// Order of Frobenius at q acting on the roots: lcm of the distinct-degree
/// factorization degrees of the polynomial mod q.
inline u64 frobenius_order(const SplittingFieldSource& src, u64 q) {
  require(is_prime(q), ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
  require(src.discriminant() % q != 0, ErrorCode::RamifiedDiscriminant,
          std::to_string(q) + " divides the discriminant " + src.discriminant().str());
  return cycle_type_lcm(distinct_degree_factor(src.reduce_mod(q)));
}

}  // namespace glk
