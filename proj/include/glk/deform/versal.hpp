#pragma once

#include <string>

#include <json.hpp>

#include "glk/core/mat2.hpp"

namespace glk {

/// Images of Frobenius and of a tame inertia generator at a nice prime q,
/// together with the unramified twist the normal form is taken up to.
struct LocalLift {
  u64 q;
  Mat2 sigma;
  Mat2 tau;
  ResidueInt twist;  // scalar unit u: sigma = u * diag(q(1+A), (1+A)^-1)

  u64 p() const { return sigma.p(); }
  int m() const { return sigma.m(); }

  /// sigma tau sigma^-1 = tau^q.
  bool tame_relation_holds() const { return sigma * tau * sigma.inverse() == tau.pow(BigInt(q)); }

  nlohmann::json to_json() const {
    auto mat = [](const Mat2& g) {
      return nlohmann::json::array({g.a().value().str(), g.b().value().str(), g.c().value().str(), g.d().value().str()});
    };
    return {{"q", q}, {"p", p()}, {"m", m()}, {"sigma", mat(sigma)}, {"tau", mat(tau)}, {"twist", twist.value().str()}};
  }
};

/// Lift over Z_p[[A,B]]/(AB) truncated mod p^m:
///   sigma -> u * diag(q(1+A), (1+A)^-1),  tau -> [[1, B], [0, 1]].
inline LocalLift versal_lift(u64 q, u64 p, int m, const BigInt& A, const BigInt& B, const BigInt& twist = 1) {
  require(q != p, ErrorCode::EqualPrimes, "versal lift at q = p");
  const ResidueInt zero(0, p, m);
  const ResidueInt a = zero.with_value(A), b = zero.with_value(B);
  require(a.value() % p == 0 && b.value() % p == 0, ErrorCode::InvalidArgument,
          "A and B must vanish mod p (lift of the basepoint)");
  require((a * b).is_zero(), ErrorCode::RelationViolated,
          "A*B = " + (a * b).value().str() + " != 0 mod " + a.modulus().str());
  const ResidueInt u = zero.with_value(twist);
  require(u.is_unit(), ErrorCode::InvalidArgument, "twist must be a unit");
  const ResidueInt one = zero.with_value(1);
  const ResidueInt one_plus_a = one + a;
  LocalLift lift{q, Mat2::diag(u * zero.with_value(q) * one_plus_a, u * one_plus_a.inverse()),
                 Mat2(one, b, zero, one), u};
  if (!lift.tame_relation_holds()) fail(ErrorCode::RelationViolated, "tame relation fails for the versal lift");
  return lift;
}

/// A-coordinate of a lift in normal form (diagonal sigma after removing the
/// twist, upper unipotent tau).
inline ResidueInt versal_a_coordinate(const LocalLift& lift) {
  const Mat2 s = lift.sigma.scaled(lift.twist.inverse());
  const Mat2& t = lift.tau;
  const ResidueInt one = s.a().with_value(1);
  require(s.is_diagonal(), ErrorCode::NotNormalForm, "Frobenius image is not diagonal");
  require(t.a() == one && t.d() == one && t.c().is_zero(), ErrorCode::NotNormalForm,
          "inertia image is not upper unipotent");
  const ResidueInt a = s.a() * s.a().with_value(lift.q).inverse() - one;
  require(s.d() * (one + a) == one, ErrorCode::NotNormalForm, "Frobenius eigenvalues are not (q(1+A), (1+A)^-1)");
  return a;
}

/// A -> 0.
inline bool is_unobstructed(const LocalLift& lift) { return versal_a_coordinate(lift).is_zero(); }

/// (I + beta p^{m-1} f(sigma)) rho for a class unramified at q whose diagonal
/// value at Frobenius is diag(v, -v).
inline LocalLift twist_by_class(const LocalLift& lift, const BigInt& beta, const BigInt& f_sigma) {
  const u64 p = lift.p();
  const int m = lift.m();
  const ResidueInt zero(0, p, m);
  const BigInt step = ipow(BigInt(p), static_cast<unsigned>(m - 1)) * mod_floor(beta * f_sigma, BigInt(p));
  const Mat2 adjust = Mat2::diag(zero.with_value(1 + step), zero.with_value(1 - step));
  return LocalLift{lift.q, adjust * lift.sigma, lift.tau, lift.twist};
}

/// beta in F_p such that twisting by beta * f * p^{m-1} zeroes an
/// A-coordinate of the form alpha * p^{m-1}.
inline u64 correct_obstruction(const LocalLift& lift, const ResidueInt& f_value) {
  const u64 p = lift.p();
  const int m = lift.m();
  require(f_value.m() == 1 && f_value.p() == p, ErrorCode::PrecisionMismatch, "f(sigma_q) must be an F_p value");
  const ResidueInt a = versal_a_coordinate(lift);
  const BigInt scale = ipow(BigInt(p), static_cast<unsigned>(m - 1));
  require(a.value() % scale == 0, ErrorCode::InvalidArgument,
          "A-coordinate " + a.value().str() + " is not a multiple of p^(m-1)");
  const u64 alpha = static_cast<u64>(a.value() / scale % p);
  if (alpha == 0) return 0;
  require(!f_value.is_zero(), ErrorCode::Uncorrectable, "f(sigma_q) = 0 cannot move a nonzero obstruction");
  const u64 beta = static_cast<u64>((-ResidueInt(BigInt(alpha), p, 1) / f_value).value());
  if (!is_unobstructed(twist_by_class(lift, beta, f_value.value()))) {
    fail(ErrorCode::Uncorrectable, "correction by beta = " + std::to_string(beta) + " left A != 0");
  }
  return beta;
}

}  // namespace glk
