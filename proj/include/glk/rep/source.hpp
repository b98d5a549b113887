#pragma once

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "glk/core/residue.hpp"
#include "glk/rep/elliptic.hpp"
#include "glk/rep/splitting_field.hpp"

namespace glk {

/// Conjugacy-class data of rho_m(Frob_q): trace and determinant mod p^m.
class FrobeniusDatum {
 public:
  FrobeniusDatum(u64 q, ResidueInt trace, ResidueInt det, int k)
      : q_(q), t_(std::move(trace)), d_(std::move(det)), k_(k) {
    require(is_prime(q), ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
    require(q != t_.p(), ErrorCode::Ramified, "Frobenius datum at q = p");
    require(t_.same_ring(d_), ErrorCode::PrecisionMismatch, "trace and determinant live in different rings");
    const ResidueInt expected = CyclotomicChar{t_.p(), t_.m(), k}(q);
    require(d_ == expected, ErrorCode::InvalidArgument,
            "determinant " + d_.str() + " != q^k = " + expected.str() + " at q = " + std::to_string(q));
  }

  u64 q() const { return q_; }
  const ResidueInt& trace() const { return t_; }
  const ResidueInt& det() const { return d_; }
  int k() const { return k_; }
  u64 p() const { return t_.p(); }
  int m() const { return t_.m(); }

  FrobeniusDatum reduce(int m_lower) const { return FrobeniusDatum(q_, t_.reduce(m_lower), d_.reduce(m_lower), k_); }

 private:
  u64 q_;
  ResidueInt t_;
  ResidueInt d_;
  int k_;
};

/// Injected Frobenius data, keyed by prime.
class ExplicitFrobTable {
 public:
  struct Entry {
    BigInt trace;
    BigInt det;
  };

  ExplicitFrobTable(u64 p, int m, int k, std::map<u64, Entry> entries)
      : p_(p), m_(m), k_(k), entries_(std::move(entries)) {
    for (const auto& [q, e] : entries_) {
      // Constructing the datum re-checks det = q^k mod p^m.
      (void)FrobeniusDatum(q, ResidueInt(e.trace, p_, m_), ResidueInt(e.det, p_, m_), k_);
    }
  }

  /// {"p":5,"m":2,"k":1,"entries":{"11":{"t":3,"d":11}}}
  static ExplicitFrobTable from_json(const nlohmann::json& j) {
    try {
      std::map<u64, Entry> entries;
      for (const auto& [key, val] : j.at("entries").items()) {
        entries[std::stoull(key)] = Entry{BigInt(val.at("t").get<i64>()), BigInt(val.at("d").get<i64>())};
      }
      return ExplicitFrobTable(j.at("p").get<u64>(), j.at("m").get<int>(), j.at("k").get<int>(), std::move(entries));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::InvalidArgument, std::string("malformed Frobenius table: ") + e.what());
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [q, e] : entries_) {
      entries[std::to_string(q)] = {{"t", static_cast<i64>(e.trace)}, {"d", static_cast<i64>(e.det)}};
    }
    return {{"p", p_}, {"m", m_}, {"k", k_}, {"entries", entries}};
  }

  u64 p() const { return p_; }
  int m() const { return m_; }
  int k() const { return k_; }
  const std::map<u64, Entry>& entries() const { return entries_; }

 private:
  u64 p_;
  int m_;
  int k_;
  std::map<u64, Entry> entries_;
};

using RepSource = std::variant<EllipticCurveSource, SplittingFieldSource, ExplicitFrobTable>;

/// True when q is unramified for the source and differs from p.
inline bool is_unramified(const RepSource& source, u64 q, u64 p) {
  if (q == p) return false;
  return std::visit(
      [q](const auto& src) -> bool {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, EllipticCurveSource>) return src.has_good_reduction(q);
        else if constexpr (std::is_same_v<T, SplittingFieldSource>) return src.discriminant() % q != 0;
        else return true;
      },
      source);
}

inline FrobeniusDatum frobenius_datum(const EllipticCurveSource& curve, u64 q, u64 p, int m, int k,
                                      u64 bound = max_prime_bound()) {
  require(k == 1, ErrorCode::Unsupported, "an elliptic curve has determinant of weight k = 1");
  require(q != p, ErrorCode::Ramified, "q = p");
  require(curve.has_good_reduction(q), ErrorCode::Ramified, std::to_string(q) + " divides the discriminant");
  const i64 aq = ec_point_count(curve, q, bound);
  return FrobeniusDatum(q, ResidueInt(aq, p, m), ResidueInt(static_cast<i64>(q), p, m), 1);
}

inline FrobeniusDatum frobenius_datum(const ExplicitFrobTable& table, u64 q, u64 p, int m, int k) {
  require(table.p() == p && table.k() == k, ErrorCode::Unsupported,
          "table header (p, k) does not match the request");
  require(m <= table.m(), ErrorCode::PrecisionMismatch,
          "table precision " + std::to_string(table.m()) + " below requested " + std::to_string(m));
  require(q != p, ErrorCode::Ramified, "q = p");
  auto it = table.entries().find(q);
  require(it != table.entries().end(), ErrorCode::MissingEntry, "no table entry for q = " + std::to_string(q));
  FrobeniusDatum full(q, ResidueInt(it->second.trace, p, table.m()), ResidueInt(it->second.det, p, table.m()), k);
  return m == table.m() ? full : full.reduce(m);
}

inline FrobeniusDatum frobenius_datum(const SplittingFieldSource&, u64, u64, int, int) {
  fail(ErrorCode::Unsupported, "a splitting-field source only determines the Frobenius order, not trace data");
}

inline FrobeniusDatum frobenius_datum(const RepSource& source, u64 q, u64 p, int m, int k) {
  return std::visit([&](const auto& src) { return frobenius_datum(src, q, p, m, k); }, source);
}

}  // namespace glk
