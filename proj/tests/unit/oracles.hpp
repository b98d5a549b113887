#pragma once

// Test-side reference implementations. Each one takes a different route from
// the library (brute force, direct enumeration) so agreement means something.

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "glk/error.hpp"

#define EXPECT_GLK_ERROR(stmt, ecode)                                                     \
  do {                                                                                    \
    try {                                                                                 \
      stmt;                                                                               \
      ADD_FAILURE() << "expected " << glk::to_string(ecode) << ", nothing thrown";        \
    } catch (const glk::Error& e_) {                                                      \
      EXPECT_EQ(e_.code(), ecode) << e_.what();                                           \
    }                                                                                     \
  } while (0)

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline i64 md(i64 x, i64 n) { return ((x % n) + n) % n; }

inline bool prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline i64 powm(i64 b, i64 e, i64 n) {
  i64 r = 1 % n;
  b = md(b, n);
  while (e > 0) {
    if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * b % n);
    b = static_cast<i64>(static_cast<__int128>(b) * b % n);
    e >>= 1;
  }
  return r;
}

/// q + 1 - #E(F_q) by trying every (x, y).
inline i64 ec_trace(const std::array<i64, 5>& a, i64 q) {
  i64 affine = 0;
  for (i64 x = 0; x < q; ++x)
    for (i64 y = 0; y < q; ++y) {
      const i64 lhs = md(y * y + a[0] * x * y + a[2] * y, q);
      const i64 rhs = md(x * x % q * x + a[1] * x % q * x + a[3] * x + a[4], q);
      if (lhs == rhs) ++affine;
    }
  return q + 1 - (affine + 1);
}

// Small polynomial arithmetic over F_p, ascending coefficients.
using Poly = std::vector<i64>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline bool divides(const Poly& g, Poly f, i64 p, Poly* quotient = nullptr) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  Poly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
  const i64 inv = powm(g.back(), p - 2, p);
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const std::size_t shift = f.size() - g.size();
    const i64 c = md(f.back() * inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = md(f[shift + i] - c * g[i], p);
    trim(f);
    if (f.empty()) break;
  }
  if (quotient) *quotient = q;
  return f.empty();
}

/// Degrees of the irreducible factors, found by trial division with every
/// monic polynomial of increasing degree.
inline std::vector<int> factor_degrees(Poly f, i64 p) {
  for (auto& c : f) c = md(c, p);
  trim(f);
  std::vector<int> out;
  int d = 1;
  while (f.size() > 1) {
    if (2 * d > static_cast<int>(f.size()) - 1) {
      out.push_back(static_cast<int>(f.size()) - 1);
      break;
    }
    bool found = false;
    const i64 total = static_cast<i64>(std::pow(p, d));
    for (i64 code = 0; code < total && !found; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      i64 c = code;
      for (int i = 0; i < d; ++i) g[i] = c % p, c /= p;
      Poly quot;
      if (divides(g, f, p, &quot)) {
        out.push_back(d);
        trim(quot);
        f = quot;
        found = true;
      }
    }
    if (!found) ++d;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// #{X trace-zero : c * g X g^-1 = X} with g = diag(q, 1), c = q^twist, all mod p.
inline i64 fixed_points(i64 q, i64 p, int twist) {
  const i64 c = twist >= 0 ? powm(q, twist, p) : powm(powm(q, p - 2, p), -twist, p);
  const i64 qi = powm(q, p - 2, p);
  i64 count = 0;
  for (i64 a = 0; a < p; ++a)
    for (i64 b = 0; b < p; ++b)
      for (i64 cc = 0; cc < p; ++cc) {
        // g X g^-1 = [[a, q b], [q^-1 c, -a]]
        const bool ok = md(c * a - a, p) == 0 && md(c * q % p * b - b, p) == 0 && md(c * qi % p * cc - cc, p) == 0;
        count += ok;
      }
  return count;
}

/// Favourable share of pairs (g, c), det g = c^k, by searching for an
/// eigenvalue lambda with eigenvalues (lambda, c lambda).
inline std::pair<i64, i64> nice_pairs(i64 p, int k) {
  i64 fav = 0, total = 0;
  for (i64 a = 0; a < p; ++a)
    for (i64 b = 0; b < p; ++b)
      for (i64 c = 0; c < p; ++c)
        for (i64 d = 0; d < p; ++d) {
          const i64 det = md(a * d - b * c, p);
          if (det == 0) continue;
          const i64 tr = md(a + d, p);
          for (i64 cyc = 1; cyc < p; ++cyc) {
            if (powm(cyc, k, p) != det) continue;
            ++total;
            if (cyc == 1 || cyc == p - 1) continue;
            bool hit = false;
            for (i64 lam = 1; lam < p && !hit; ++lam)
              hit = md(lam * (1 + cyc), p) == tr && md(cyc * lam % p * lam, p) == det;
            fav += hit;
          }
        }
  return {fav, total};
}

}  // namespace oracle
