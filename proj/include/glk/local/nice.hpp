#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "glk/core/primes.hpp"
#include "glk/local/cohomology.hpp"
#include "glk/rep/source.hpp"

namespace glk {

/// Eigenvalue-ratio-q test on trace/determinant data, via the identity
/// q t^2 = d (1+q)^2: eigenvalues (lambda, lambda q) with lambda^2 q = d give it,
/// and conversely lambda = t/(1+q) recovers them since 1+q is a unit.
inline bool has_ratio_q(u64 q, const ResidueInt& t, const ResidueInt& d) {
  const ResidueInt qq = t.with_value(q);
  const ResidueInt one_plus_q = t.with_value(q + 1);
  return qq * t * t == d * one_plus_q * one_plus_q;
}

inline bool is_rho_m_nice(const FrobeniusDatum& datum) {
  if (!is_nice_residue(datum.q(), datum.p())) return false;
  return has_ratio_q(datum.q(), datum.trace(), datum.det());
}

inline bool is_nice(const FrobeniusDatum& datum) {
  return is_rho_m_nice(datum.m() == 1 ? datum : datum.reduce(1));
}

enum class ImageKind { ContainsSL2, FullGL2 };

inline std::string to_string(ImageKind kind) { return kind == ImageKind::FullGL2 ? "full" : "sl2"; }

struct DensityOracle {
  Rational density;
  u64 favorable = 0;
  u64 total = 0;
};

/// Chebotarev density of nice primes by enumerating pairs (g, c): g in the
/// image inside GL_2(F_p), c the cyclotomic coordinate, det g = c^k. A pair is
/// favourable when c != +-1 and g has eigenvalue ratio c.
///
/// ContainsSL2 takes the smallest image compatible with det = chi^k, i.e. the
/// matrices whose determinant is a k-th power.
inline DensityOracle nice_density_oracle(u64 p, int k, ImageKind image) {
  require(is_prime(p) && p >= 5, ErrorCode::InvalidArgument, "density oracle needs a prime p >= 5");
  std::vector<unsigned char> kth_power(p, 0);
  std::vector<std::vector<u64>> c_for_det(p);
  for (u64 c = 1; c < p; ++c) {
    const u64 ck = detail::signed_pow_mod(c, k, p);
    kth_power[ck] = 1;
    c_for_det[ck].push_back(c);
  }
  DensityOracle out;
  for (u64 a = 0; a < p; ++a)
    for (u64 b = 0; b < p; ++b)
      for (u64 c = 0; c < p; ++c)
        for (u64 d = 0; d < p; ++d) {
          const u64 det = (a * d + p * p - b * c % p) % p;
          if (det == 0) continue;
          if (image == ImageKind::ContainsSL2 && !kth_power[det]) continue;
          const u64 tr = (a + d) % p;
          for (u64 cyc : c_for_det[det]) {
            ++out.total;
            if (cyc == 1 || cyc == p - 1) continue;
            const u64 lhs = cyc * tr % p * tr % p;
            const u64 rhs = det * ((1 + cyc) * (1 + cyc) % p) % p;
            if (lhs == rhs) ++out.favorable;
          }
        }
  out.density = out.total == 0 ? Rational(0) : Rational(BigInt(out.favorable), BigInt(out.total));
  return out;
}

struct ScanRecord {
  u64 q;
  bool nice;
  bool rho_m_nice;
  BigInt trace;  // mod p^m, canonical
};

struct ScanSummary {
  u64 scanned = 0;
  u64 nice = 0;
  u64 rho_m_nice = 0;
  Rational empirical_density{0};
  std::optional<Rational> oracle_density;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

namespace detail {

inline ScanRecord scan_one(const RepSource& source, u64 q, u64 p, int m, int k) {
  const FrobeniusDatum datum = frobenius_datum(source, q, p, m, k);
  return {q, is_nice(datum), is_rho_m_nice(datum), datum.trace().value()};
}

}  // namespace detail

/// One record per unramified prime q <= limit (q != p), ascending. Threads
/// write into preassigned slots, so the output order never depends on scheduling.
inline ScanResult scan_nice(const RepSource& source, u64 p, int m, int k, u64 limit, unsigned threads = 0) {
  require(is_prime(p), ErrorCode::InvalidArgument, "p must be prime");
  const u64 bound = max_prime_bound();
  require(limit <= bound, ErrorCode::LimitExceeded,
          "scan limit " + std::to_string(limit) + " exceeds bound " + std::to_string(bound));
  std::vector<u64> candidates;
  if (limit >= 2) {
    for (u64 q : prime_sieve(limit)) {
      if (!is_unramified(source, q, p)) continue;
      if (const auto* table = std::get_if<ExplicitFrobTable>(&source); table && !table->entries().count(q)) continue;
      candidates.push_back(q);
    }
  }

  ScanResult result;
  result.records.resize(candidates.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, candidates.size())));

  // Point counting costs O(q): interleave blocks so threads get similar loads.
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned tid) {
    try {
      for (std::size_t i = tid; i < candidates.size(); i += threads) {
        result.records[i] = detail::scan_one(source, candidates[i], p, m, k);
      }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  auto& s = result.summary;
  s.scanned = result.records.size();
  for (const auto& r : result.records) {
    s.nice += r.nice;
    s.rho_m_nice += r.rho_m_nice;
  }
  s.empirical_density = s.scanned ? Rational(BigInt(s.nice), BigInt(s.scanned)) : Rational(0);
  if (p >= 5 && k >= 0) s.oracle_density = nice_density_oracle(p, k, ImageKind::FullGL2).density;
  return result;
}

}  // namespace glk
