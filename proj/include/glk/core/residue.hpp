#pragma once

#include <ostream>
#include <string>

#include "glk/core/integer.hpp"

namespace glk {

/// An element of Z/p^m with its precision tracked alongside the value.
///
/// Values are kept in the canonical range [0, p^m). Operands of a binary
/// operation must share (p, m); lowering precision is an explicit reduce().
class ResidueInt {
 public:
  ResidueInt(const BigInt& value, u64 p, int m) : p_(p), m_(m) {
    require(is_prime(p), ErrorCode::InvalidArgument, "residue base must be prime, got " + std::to_string(p));
    require(m >= 1, ErrorCode::InvalidArgument, "precision must be >= 1");
    modulus_ = ipow(BigInt(p), static_cast<unsigned>(m));
    value_ = mod_floor(value, modulus_);
  }

  ResidueInt(i64 value, u64 p, int m) : ResidueInt(BigInt(value), p, m) {}

  /// Same ring, different value.
  ResidueInt with_value(const BigInt& v) const { return ResidueInt(mod_floor(v, modulus_), *this); }

  const BigInt& value() const { return value_; }
  u64 p() const { return p_; }
  int m() const { return m_; }
  const BigInt& modulus() const { return modulus_; }

  /// Representative in (-p^m/2, p^m/2]; display only.
  BigInt signed_value() const { return value_ * 2 > modulus_ ? value_ - modulus_ : value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return value_ % p_ != 0; }

  bool same_ring(const ResidueInt& o) const { return p_ == o.p_ && m_ == o.m_; }

  /// Exact truncation to Z/p^{m'} for m' <= m.
  ResidueInt reduce(int m_lower) const {
    require(m_lower >= 1 && m_lower <= m_, ErrorCode::PrecisionMismatch,
            "reduce(" + std::to_string(m_lower) + ") from precision " + std::to_string(m_));
    return ResidueInt(value_, p_, m_lower);
  }

  /// The canonical set-theoretic lift: same integer representative, higher precision.
  ResidueInt lift(int m_higher) const {
    require(m_higher >= m_, ErrorCode::PrecisionMismatch,
            "lift(" + std::to_string(m_higher) + ") from precision " + std::to_string(m_));
    return ResidueInt(value_, p_, m_higher);
  }

  ResidueInt operator+(const ResidueInt& o) const {
    check(o);
    BigInt v = value_ + o.value_;
    if (v >= modulus_) v -= modulus_;
    return ResidueInt(std::move(v), *this);
  }
  ResidueInt operator-(const ResidueInt& o) const {
    check(o);
    BigInt v = value_ - o.value_;
    if (v < 0) v += modulus_;
    return ResidueInt(std::move(v), *this);
  }
  ResidueInt operator*(const ResidueInt& o) const {
    check(o);
    return ResidueInt(BigInt(value_ * o.value_ % modulus_), *this);
  }
  ResidueInt operator-() const { return ResidueInt(value_ == 0 ? BigInt(0) : BigInt(modulus_ - value_), *this); }

  ResidueInt& operator+=(const ResidueInt& o) { return *this = *this + o; }
  ResidueInt& operator-=(const ResidueInt& o) { return *this = *this - o; }
  ResidueInt& operator*=(const ResidueInt& o) { return *this = *this * o; }

  ResidueInt inverse() const {
    require(is_unit(), ErrorCode::NotInvertible, value_.str() + " is not a unit mod " + modulus_.str());
    return ResidueInt(inverse_mod(value_, modulus_), *this);
  }

  ResidueInt operator/(const ResidueInt& o) const { return *this * o.inverse(); }

  /// Negative exponents invert first.
  ResidueInt pow(const BigInt& e) const {
    if (e < 0) return inverse().pow(-e);
    return ResidueInt(boost::multiprecision::powm(value_, e, modulus_), *this);
  }

  bool operator==(const ResidueInt& o) const { return same_ring(o) && value_ == o.value_; }
  bool operator!=(const ResidueInt& o) const { return !(*this == o); }

  std::string str() const { return value_.str() + " mod " + std::to_string(p_) + "^" + std::to_string(m_); }

 private:
  // Unchecked: value already canonical, ring copied from `like`.
  ResidueInt(BigInt value, const ResidueInt& like)
      : value_(std::move(value)), p_(like.p_), m_(like.m_), modulus_(like.modulus_) {}

  void check(const ResidueInt& o) const {
    if (!same_ring(o)) {
      fail(ErrorCode::PrecisionMismatch, "operands live in Z/" + std::to_string(p_) + "^" + std::to_string(m_) +
                                             " and Z/" + std::to_string(o.p_) + "^" + std::to_string(o.m_));
    }
  }

  BigInt value_;
  u64 p_;
  int m_;
  BigInt modulus_;
};

inline std::ostream& operator<<(std::ostream& os, const ResidueInt& x) { return os << x.str(); }

/// Evaluation r ↦ r^k mod p^m of a power of the cyclotomic character.
struct CyclotomicChar {
  u64 p;
  int m;
  int k;

  ResidueInt operator()(u64 r) const {
    require(r % p != 0, ErrorCode::InvalidArgument, "cyclotomic character is evaluated away from p");
    return ResidueInt(BigInt(r), p, m).pow(k);
  }
};

}  // namespace glk
