#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "glk/core/residue.hpp"

namespace glk {

/// 2x2 matrix over Z/p^m; all four entries share one ring.
class Mat2 {
 public:
  Mat2(ResidueInt a, ResidueInt b, ResidueInt c, ResidueInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    require(a_.same_ring(b_) && a_.same_ring(c_) && a_.same_ring(d_), ErrorCode::PrecisionMismatch,
            "matrix entries must share (p, m)");
  }

  static Mat2 from_ints(i64 a, i64 b, i64 c, i64 d, u64 p, int m) {
    ResidueInt base(0, p, m);
    return Mat2(base.with_value(a), base.with_value(b), base.with_value(c), base.with_value(d));
  }

  static Mat2 identity(u64 p, int m) { return from_ints(1, 0, 0, 1, p, m); }
  static Mat2 diag(const ResidueInt& x, const ResidueInt& y) {
    auto z = x.with_value(0);
    return Mat2(x, z, z, y);
  }

  const ResidueInt& a() const { return a_; }
  const ResidueInt& b() const { return b_; }
  const ResidueInt& c() const { return c_; }
  const ResidueInt& d() const { return d_; }

  u64 p() const { return a_.p(); }
  int m() const { return a_.m(); }

  ResidueInt trace() const { return a_ + d_; }
  ResidueInt det() const { return a_ * d_ - b_ * c_; }
  bool is_invertible() const { return det().is_unit(); }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
  }
  Mat2 operator+(const Mat2& o) const { return Mat2(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_); }
  Mat2 operator-(const Mat2& o) const { return Mat2(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_); }
  Mat2 scaled(const ResidueInt& s) const { return Mat2(s * a_, s * b_, s * c_, s * d_); }

  Mat2 inverse() const {
    ResidueInt inv = det().inverse();
    return Mat2(d_ * inv, -b_ * inv, -c_ * inv, a_ * inv);
  }

  Mat2 pow(BigInt e) const {
    if (e < 0) return inverse().pow(-e);
    Mat2 result = identity(p(), m());
    Mat2 base = *this;
    while (e > 0) {
      if ((e & 1) != 0) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  Mat2 reduce(int m_lower) const { return Mat2(a_.reduce(m_lower), b_.reduce(m_lower), c_.reduce(m_lower), d_.reduce(m_lower)); }
  Mat2 lift(int m_higher) const { return Mat2(a_.lift(m_higher), b_.lift(m_higher), c_.lift(m_higher), d_.lift(m_higher)); }

  bool is_identity() const { return *this == identity(p(), m()); }
  bool is_diagonal() const { return b_.is_zero() && c_.is_zero(); }

  bool operator==(const Mat2& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  std::string str() const {
    return "[[" + a_.value().str() + "," + b_.value().str() + "],[" + c_.value().str() + "," + d_.value().str() +
           "]] mod " + std::to_string(p()) + "^" + std::to_string(m());
  }

 private:
  ResidueInt a_, b_, c_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const Mat2& g) { return os << g.str(); }

struct CharPoly2 {
  ResidueInt trace;
  ResidueInt det;
};

/// x^2 - trace*x + det.
inline CharPoly2 mat2_charpoly(const Mat2& g) { return {g.trace(), g.det()}; }

/// Multiplicative order of an invertible matrix, by repeated multiplication up to `bound`.
inline std::optional<u64> multiplicative_order(const Mat2& g, u64 bound) {
  require(g.is_invertible(), ErrorCode::NotInvertible, "order of a singular matrix");
  Mat2 x = g;
  for (u64 n = 1; n <= bound; ++n) {
    if (x.is_identity()) return n;
    x = x * g;
  }
  return std::nullopt;
}

}  // namespace glk
