#pragma once

// Ledger configurations behind the dimension chases of the lifting argument.
// Each builder returns the ledger before and after the auxiliary prime(s) are
// added, so callers can compare both values against the closed forms.

#include <string>

#include "glk/selmer/ledger.hpp"

namespace glk {

struct Chase {
  Ledger before;
  Ledger after;
  int before_value() const { return wiles_difference(before); }
  int after_value() const { return wiles_difference(after); }
};

namespace detail {

// A place of S or R where only H^0 matters to the count (dim L_v = 0).
inline PlaceEntry silent_place(std::string label) { return {std::move(label), 1, 0, 1, 1, 0, true}; }

}  // namespace detail

/// Places with total h0 = n all carrying L_v = 0 (difference -n), then n nice
/// primes with the full local condition (difference 0).
inline Chase unram_chase(int n) {
  require(n >= 0, ErrorCode::InvalidArgument, "n must be non-negative");
  Chase c;
  for (int i = 1; i <= n; ++i) c.before.add(detail::silent_place("v" + std::to_string(i)));
  c.after = c.before;
  for (int i = 1; i <= n; ++i) c.after.add(PlaceEntry::nice("q" + std::to_string(i), 2));
  c.before.validate();
  c.after.validate();
  return c;
}

namespace detail {

// n nice Q-primes plus n + d further places, all with h0 = 1: total 2n + d.
inline Ledger polarisation_base(int n, int d, int k_unramified) {
  require(n >= 1 && d >= 0, ErrorCode::InvalidArgument, "need n >= 1, d >= 0");
  Ledger l;
  for (int i = 1; i <= n; ++i) l.add(PlaceEntry::nice("q" + std::to_string(i), i == k_unramified ? 1 : 0));
  for (int i = 1; i <= n + d; ++i) l.add(silent_place("a" + std::to_string(i)));
  return l;
}

}  // namespace detail

/// L-conditions: unramified at q_k, zero elsewhere (-2n-d+1); adding t_k with the
/// full condition gives -2n-d+2.
inline Chase polarisation_L_chase(int n, int d, int k = 1) {
  require(k >= 1 && k <= n, ErrorCode::InvalidArgument, "k must index one of the n Q-primes");
  Chase c;
  c.before = detail::polarisation_base(n, d, k);
  c.after = c.before;
  c.after.add(PlaceEntry::nice("t" + std::to_string(k), 2));
  c.before.validate();
  c.after.validate();
  return c;
}

/// M-conditions: zero everywhere (-2n-d); adding t_k with the full condition
/// gives -2n-d+1.
inline Chase polarisation_M_chase(int n, int d, int k = 1) {
  require(k >= 1 && k <= n, ErrorCode::InvalidArgument, "k must index one of the n Q-primes");
  Chase c;
  c.before = detail::polarisation_base(n, d, 0);
  c.after = c.before;
  c.after.add(PlaceEntry::nice("t" + std::to_string(k), 2));
  c.before.validate();
  c.after.validate();
  return c;
}

}  // namespace glk
