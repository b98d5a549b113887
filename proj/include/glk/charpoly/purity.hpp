#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glk/core/crt.hpp"
#include "glk/core/residue.hpp"

namespace glk {

struct TraceConstraint {
  u64 p;
  int m;  // m = 0 is the empty constraint
  BigInt t;

  BigInt modulus() const { return ipow(BigInt(p), static_cast<unsigned>(m)); }
};

/// x^2 - a x + r^k with a pinned by congruences.
struct CharPolyChoice {
  u64 r;
  int k;
  BigInt a;
  std::vector<TraceConstraint> constraints;
  bool pure;

  BigInt constant() const { return ipow(BigInt(r), static_cast<unsigned>(k)); }
  std::array<BigInt, 3> polynomial() const { return {BigInt(1), BigInt(-a), constant()}; }

  nlohmann::json to_json() const {
    return {{"r", r}, {"k", k}, {"a", a.str()}, {"pure", pure},
            {"polynomial", {"1", BigInt(-a).str(), constant().str()}}};
  }
};

/// Both roots of x^2 - a x + r^k have absolute value r^{k/2}.
inline bool is_weil(const BigInt& a, u64 r, int k) {
  require(k >= 0, ErrorCode::InvalidArgument, "weight must be non-negative");
  return a * a <= 4 * ipow(BigInt(r), static_cast<unsigned>(k));
}

/// (p^m / 2)^{2/k}; primes strictly above it admit a pure choice for every
/// residue mod p^m. Sufficient, not sharp.
inline double feasibility_threshold(u64 p, int m, int k) {
  require(k >= 1, ErrorCode::InvalidArgument, "threshold needs k >= 1");
  return std::pow(std::pow(static_cast<double>(p), m) / 2.0, 2.0 / k);
}

/// Exact form of r > (M/2)^{2/k}: 4 r^k > M^2.
inline bool above_threshold(u64 r, const BigInt& modulus, int k) {
  return 4 * ipow(BigInt(r), static_cast<unsigned>(k)) > modulus * modulus;
}

struct PurityOptions {
  bool enforce_purity = true;  // off only for the k = 0 variant
};

namespace detail {

inline void check_choice_args(u64 r, int k, const std::vector<TraceConstraint>& cs, const PurityOptions& opt) {
  require(is_prime(r), ErrorCode::InvalidArgument, std::to_string(r) + " is not prime");
  require(opt.enforce_purity ? k >= 1 : k >= 0, ErrorCode::InvalidArgument,
          opt.enforce_purity ? "purity needs k >= 1" : "k must be non-negative");
  for (const auto& c : cs) {
    require(is_prime(c.p) && c.m >= 0, ErrorCode::InvalidArgument, "constraint needs a prime and m >= 0");
    require(r != c.p, ErrorCode::InvalidArgument, "r must differ from the constraint primes");
  }
}

}  // namespace detail

/// Minimal |a| with a = t_i mod p_i^{m_i} for every constraint and, when purity
/// is enforced, a^2 < 4 r^k. Ties go to the positive representative.
inline std::optional<CharPolyChoice> window_choice(u64 r, int k, std::vector<TraceConstraint> cs,
                                                   PurityOptions opt = {}) {
  detail::check_choice_args(r, k, cs, opt);
  BigInt residue = 0, modulus = 1;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      require(cs[i].p != cs[j].p || cs[i].m == 0 || cs[j].m == 0, ErrorCode::InvalidArgument,
              "constraint primes must be distinct");
    const BigInt mi = cs[i].modulus();
    cs[i].t = mod_floor(cs[i].t, mi);
    residue = crt_pair(residue, modulus, cs[i].t, mi);
    modulus *= mi;
  }
  const BigInt neg = residue - modulus;
  const BigInt a = (residue <= -neg) ? residue : neg;
  const BigInt bound = 4 * ipow(BigInt(r), static_cast<unsigned>(k));
  const bool strict_pure = a * a < bound;
  if (opt.enforce_purity && !strict_pure) return std::nullopt;
  return CharPolyChoice{r, k, a, std::move(cs), strict_pure};
}

inline std::optional<CharPolyChoice> purity_window(u64 r, int k, u64 p, int m, const BigInt& t,
                                                   PurityOptions opt = {}) {
  require(m >= 1, ErrorCode::InvalidArgument, "precision must be positive");
  return window_choice(r, k, {TraceConstraint{p, m, t}}, opt);
}

/// CRT of two constraints at distinct primes, then the same window.
inline std::optional<CharPolyChoice> compatible_choice(u64 r, int k, const TraceConstraint& c1,
                                                       const TraceConstraint& c2, PurityOptions opt = {}) {
  require(c1.p != c2.p, ErrorCode::InvalidArgument, "compatible choice needs two distinct primes");
  return window_choice(r, k, {c1, c2}, opt);
}

/// Coefficients [1, -(x+y), xy] of (X - x)(X - y).
inline std::array<ResidueInt, 3> ramified_charpoly(const ResidueInt& x, const ResidueInt& y) {
  require(x.same_ring(y), ErrorCode::PrecisionMismatch, "diagonal entries in different rings");
  return {x.with_value(1), -(x + y), x * y};
}

}  // namespace glk
