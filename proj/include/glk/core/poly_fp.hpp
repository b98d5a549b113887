#pragma once

#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "glk/core/residue.hpp"

namespace glk {

/// Dense univariate polynomial over F_p, coefficients stored lowest degree first.
class PolyOverFp {
 public:
  PolyOverFp(u64 p, std::vector<u64> ascending) : p_(p), c_(std::move(ascending)) {
    require(is_prime(p), ErrorCode::InvalidArgument, "polynomial base field needs a prime, got " + std::to_string(p));
    for (auto& x : c_) x %= p_;
    trim();
  }

  /// Integer coefficients, highest degree first (the CLI's input order).
  static PolyOverFp from_integers_desc(u64 p, const std::vector<BigInt>& desc) {
    std::vector<u64> asc(desc.size());
    for (std::size_t i = 0; i < desc.size(); ++i) {
      asc[desc.size() - 1 - i] = static_cast<u64>(mod_floor(desc[i], BigInt(p)));
    }
    return PolyOverFp(p, std::move(asc));
  }

  static PolyOverFp constant(u64 p, u64 c) { return PolyOverFp(p, {c}); }
  static PolyOverFp x(u64 p) { return PolyOverFp(p, {0, 1}); }

  u64 p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  ResidueInt coefficient(std::size_t i) const { return ResidueInt(BigInt(coeff(i)), p_, 1); }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<u64>& coefficients() const { return c_; }

  u64 eval(u64 x) const {
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
    return acc;
  }

  PolyOverFp monic() const {
    if (is_zero()) return *this;
    u64 inv = inverse_mod(leading(), p_);
    std::vector<u64> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mul_mod(c_[i], inv, p_);
    return PolyOverFp(p_, std::move(out), Trusted{});
  }

  PolyOverFp derivative() const {
    std::vector<u64> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(mul_mod(c_[i], i % p_, p_));
    return PolyOverFp(p_, std::move(out), Trusted{});
  }

  PolyOverFp operator+(const PolyOverFp& o) const {
    check(o);
    std::vector<u64> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeff(i) + o.coeff(i)) % p_;
    return PolyOverFp(p_, std::move(out), Trusted{});
  }

  PolyOverFp operator-(const PolyOverFp& o) const {
    check(o);
    std::vector<u64> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
    return PolyOverFp(p_, std::move(out), Trusted{});
  }

  PolyOverFp operator*(const PolyOverFp& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return PolyOverFp(p_, {}, Trusted{});
    std::vector<u64> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] = (out[i + j] + mul_mod(c_[i], o.c_[j], p_)) % p_;
    }
    return PolyOverFp(p_, std::move(out), Trusted{});
  }

  /// (quotient, remainder) of Euclidean division by a nonzero divisor.
  std::pair<PolyOverFp, PolyOverFp> divmod(const PolyOverFp& divisor) const {
    check(divisor);
    require(!divisor.is_zero(), ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<u64> r = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {PolyOverFp(p_, {}, Trusted{}), *this};
    std::vector<u64> q(static_cast<std::size_t>(degree() - dd + 1), 0);
    const u64 inv_lead = inverse_mod(divisor.leading(), p_);
    for (int i = degree(); i >= dd; --i) {
      const u64 coef = mul_mod(r[static_cast<std::size_t>(i)], inv_lead, p_);
      q[static_cast<std::size_t>(i - dd)] = coef;
      if (coef == 0) continue;
      for (int j = 0; j <= dd; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - dd + j)];
        slot = (slot + p_ - mul_mod(coef, divisor.c_[static_cast<std::size_t>(j)], p_)) % p_;
      }
    }
    r.resize(static_cast<std::size_t>(dd));
    return {PolyOverFp(p_, std::move(q), Trusted{}), PolyOverFp(p_, std::move(r), Trusted{})};
  }

  PolyOverFp operator%(const PolyOverFp& divisor) const { return divmod(divisor).second; }
  PolyOverFp operator/(const PolyOverFp& divisor) const { return divmod(divisor).first; }

  /// this^e mod modulus.
  PolyOverFp powmod(BigInt e, const PolyOverFp& modulus) const {
    PolyOverFp result = constant(p_, 1) % modulus;
    PolyOverFp base = *this % modulus;
    while (e > 0) {
      if ((e & 1) != 0) result = (result * base) % modulus;
      base = (base * base) % modulus;
      e >>= 1;
    }
    return result;
  }

  bool operator==(const PolyOverFp& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const PolyOverFp& o) const { return !(*this == o); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const u64 c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!s.empty()) s += " + ";
      if (c != 1 || i == 0) s += std::to_string(c);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s + " (mod " + std::to_string(p_) + ")";
  }

 private:
  struct Trusted {};
  PolyOverFp(u64 p, std::vector<u64> c, Trusted) : p_(p), c_(std::move(c)) { trim(); }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check(const PolyOverFp& o) const {
    require(p_ == o.p_, ErrorCode::PrecisionMismatch, "polynomials over different prime fields");
  }

  u64 p_;
  std::vector<u64> c_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyOverFp& f) { return os << f.str(); }

/// Monic gcd.
inline PolyOverFp gcd(PolyOverFp a, PolyOverFp b) {
  while (!b.is_zero()) {
    PolyOverFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool is_squarefree(const PolyOverFp& f) {
  if (f.degree() <= 0) return true;
  PolyOverFp df = f.derivative();
  if (df.is_zero()) return false;
  return gcd(f, df).degree() == 0;
}

/// One block of a distinct-degree factorization: the product of all monic
/// irreducible factors of a given degree.
struct DegreeBlock {
  int degree;
  int count;
  PolyOverFp product;
};

/// Distinct-degree splitting of a squarefree polynomial. The blocks multiply
/// back to the monic associate of f.
inline std::vector<DegreeBlock> distinct_degree_split(const PolyOverFp& f) {
  require(f.degree() >= 1, ErrorCode::InvalidArgument, "distinct-degree factorization of a constant");
  require(is_squarefree(f), ErrorCode::NotSquarefree, "gcd(f, f') != 1 for " + f.str());
  const u64 p = f.p();
  std::vector<DegreeBlock> blocks;
  PolyOverFp rest = f.monic();
  const PolyOverFp x = PolyOverFp::x(p);
  PolyOverFp h = x % rest;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = h.powmod(BigInt(p), rest);
    PolyOverFp g = gcd(h - x, rest);
    if (g.degree() > 0) {
      blocks.push_back({d, g.degree() / d, g});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) blocks.push_back({rest.degree(), 1, rest});
  return blocks;
}

struct DegreeCount {
  int degree;
  int count;
  bool operator==(const DegreeCount&) const = default;
};

inline std::vector<DegreeCount> distinct_degree_factor(const PolyOverFp& f) {
  std::vector<DegreeCount> out;
  for (const auto& b : distinct_degree_split(f)) out.push_back({b.degree, b.count});
  return out;
}

/// lcm of the irreducible-factor degrees: the order of Frobenius on the roots.
inline u64 cycle_type_lcm(const std::vector<DegreeCount>& degrees) {
  u64 l = 1;
  for (const auto& dc : degrees) l = std::lcm(l, static_cast<u64>(dc.degree));
  return l;
}

}  // namespace glk
