#pragma once

#include <string>

#include "glk/core/residue.hpp"

namespace glk {

/// A class in H^1(G_q, F_p) (twist 0) or H^1(G_q, mu_p) (twist 1) of the tame
/// quotient, recorded by its values on Frobenius and on a tame inertia generator.
struct LocalClass {
  u64 q;
  ResidueInt unram_value;  // value at sigma
  ResidueInt ram_value;    // value at tau
  int twist;               // 0: F_p factor, 1: mu_p factor

  static LocalClass make(u64 q, u64 p, i64 at_sigma, i64 at_tau, int twist) {
    return {q, ResidueInt(at_sigma, p, 1), ResidueInt(at_tau, p, 1), twist};
  }

  bool is_unramified() const { return ram_value.is_zero(); }
};

/// Local invariant of x ∪ y in H^2(G_q, mu_p) = F_p, with the normalization
/// inv(g ∪ f) = 1 for g(sigma) = 1 unramified and f(tau) = 1.
inline ResidueInt cup_invariant(const LocalClass& x, const LocalClass& y) {
  require(x.q == y.q, ErrorCode::TwistMismatch, "classes live at different primes");
  require(x.unram_value.same_ring(y.unram_value) && x.unram_value.m() == 1, ErrorCode::PrecisionMismatch,
          "cup product needs classes with F_p values for one p");
  require((x.twist == 0 && y.twist == 1) || (x.twist == 1 && y.twist == 0), ErrorCode::TwistMismatch,
          "pairing is F_p x mu_p -> mu_p; got twists " + std::to_string(x.twist) + " and " + std::to_string(y.twist));
  return x.unram_value * y.ram_value - x.ram_value * y.unram_value;
}

}  // namespace glk
