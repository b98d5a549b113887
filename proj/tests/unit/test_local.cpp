#include <gtest/gtest.h>

#include "glk/local/cohomology.hpp"
#include "glk/local/cup.hpp"
#include "glk/local/nice.hpp"
#include "oracles.hpp"

using namespace glk;

namespace {

int log_p(i64 n, i64 p) {
  int e = 0;
  while (n > 1) n /= p, ++e;
  return e;
}

}  // namespace

TEST(LocalDims, NiceResiduesGiveOneTwoOne) {
  for (u64 p : {5, 7, 11, 13})
    for (u64 q = 2; q < 400; ++q) {
      if (!oracle::prime(q) || q == p || !is_nice_residue(q, p)) continue;
      const auto [ad, dual] = ad0_local_dims(q, p);
      EXPECT_EQ(ad, (LocalDims{1, 2, 1, 1})) << q << " " << p;
      EXPECT_EQ(dual, (LocalDims{1, 2, 1, 1})) << q << " " << p;
    }
}

TEST(LocalDims, InvariantsAgreeWithFixedPointCount) {
  // Ad^0 is self-dual, so h2(Ad^0) = h0(Ad^0(1)) and vice versa.
  for (u64 p : {5, 7, 11})
    for (u64 q = 2; q < 120; ++q) {
      if (!oracle::prime(q) || q == p) continue;
      const int h0 = log_p(oracle::fixed_points(q, p, 0), p);
      const int h0_dual = log_p(oracle::fixed_points(q, p, 1), p);
      const auto ad = ad0_shape(q, p).dims();
      const auto dual = ad0_dual_shape(q, p).dims();
      EXPECT_EQ(ad.h0, h0);
      EXPECT_EQ(ad.h2, h0_dual);
      EXPECT_EQ(ad.h1, h0 + h0_dual);
      EXPECT_EQ(ad.h1_nr, h0);
      EXPECT_EQ(dual.h0, h0_dual);
      EXPECT_EQ(dual.h2, h0);
    }
}

TEST(LocalDims, SingleTwistMatchesDirectPowers) {
  for (u64 p : {5, 7})
    for (u64 q : {2, 3, 11, 13, 29, 41})
      for (int i = -3; i <= 3; ++i) {
        if (q == p) continue;
        const auto d = twist_dims(q, p, i);
        const i64 qi = static_cast<i64>(q);
        const i64 pi = static_cast<i64>(p);
        auto pw = [&](int e) { return e >= 0 ? oracle::powm(qi, e, pi) : oracle::powm(oracle::powm(qi, pi - 2, pi), -e, pi); };
        EXPECT_EQ(d.h0, pw(i) == 1);
        EXPECT_EQ(d.h2, pw(i - 1) == 1);
        EXPECT_EQ(d.h1 - d.h0 - d.h2, 0);
      }
}

TEST(LocalDims, ErrorsForEqualPrimesAndTrivialResidues) {
  EXPECT_GLK_ERROR(ad0_local_dims(5, 5), ErrorCode::EqualPrimes);
  EXPECT_GLK_ERROR(ad0_local_dims(11, 5), ErrorCode::NotNiceResidue);
  EXPECT_GLK_ERROR(ad0_local_dims(19, 5), ErrorCode::NotNiceResidue);
  EXPECT_GLK_ERROR(twist_dims(7, 7, 0), ErrorCode::EqualPrimes);
}

TEST(NiceTest, RatioIdentityMatchesEigenvalueSearch) {
  for (u64 p : {5, 7})
    for (u64 q : {2, 3, 13, 17, 23}) {
      if (q % p == 0 || !is_nice_residue(q, p)) continue;  // q = -1 kills 1 + q
      for (i64 t = 0; t < static_cast<i64>(p); ++t)
        for (i64 d = 1; d < static_cast<i64>(p); ++d) {
          bool hit = false;
          for (i64 lam = 1; lam < static_cast<i64>(p) && !hit; ++lam)
            hit = oracle::md(lam * (1 + static_cast<i64>(q)), p) == t &&
                  oracle::md(lam * lam % static_cast<i64>(p) * static_cast<i64>(q), p) == d;
          EXPECT_EQ(has_ratio_q(q, ResidueInt(t, p, 1), ResidueInt(d, p, 1)), hit) << q << " " << t << " " << d;
        }
    }
}

TEST(NiceTest, LiftedDatumReducesToFirstLevel) {
  // diag(2, 1) mod 25 with q = 2: ratio 2, det = 2, trace = 3
  const FrobeniusDatum d(2, ResidueInt(3, 5, 2), ResidueInt(2, 5, 2), 1);
  EXPECT_TRUE(is_rho_m_nice(d));
  EXPECT_TRUE(is_nice(d));
  // Perturbing by 5 keeps the level-1 test and breaks level 2.
  const FrobeniusDatum e(2, ResidueInt(8, 5, 2), ResidueInt(2, 5, 2), 1);
  EXPECT_FALSE(is_rho_m_nice(e));
  EXPECT_TRUE(is_nice(e));
}

TEST(DensityOracle, AgreesWithEigenvalueEnumeration) {
  for (u64 p : {5, 7, 11})
    for (int k : {1, 2}) {
      const auto o = nice_density_oracle(p, k, ImageKind::FullGL2);
      const auto [fav, total] = oracle::nice_pairs(static_cast<i64>(p), k);
      EXPECT_EQ(o.favorable, static_cast<u64>(fav)) << p << " " << k;
      EXPECT_EQ(o.total, static_cast<u64>(total));
      EXPECT_EQ(nice_density_oracle(p, k, ImageKind::ContainsSL2).density, o.density);
    }
}

TEST(DensityOracle, KnownValues) {
  EXPECT_EQ(nice_density_oracle(5, 1, ImageKind::FullGL2).density, Rational(1, 4));
  EXPECT_EQ(nice_density_oracle(7, 1, ImageKind::FullGL2).density, Rational(2, 9));
  EXPECT_EQ(nice_density_oracle(11, 1, ImageKind::FullGL2).density, Rational(4, 25));
  EXPECT_EQ(nice_density_oracle(5, 2, ImageKind::FullGL2).density, Rational(0));
  EXPECT_EQ(nice_density_oracle(7, 2, ImageKind::FullGL2).density, Rational(1, 9));
  EXPECT_GLK_ERROR(nice_density_oracle(3, 1, ImageKind::FullGL2), ErrorCode::InvalidArgument);
}

TEST(Scan, Curve37a1SmallRangeByHand) {
  const RepSource e = EllipticCurveSource::curve_37a1();
  const auto r = scan_nice(e, 5, 1, 1, 30, 1);
  std::vector<u64> qs;
  for (const auto& rec : r.records) qs.push_back(rec.q);
  EXPECT_EQ(qs, (std::vector<u64>{2, 3, 7, 11, 13, 17, 19, 23, 29}));
  for (const auto& rec : r.records) {
    const i64 a = oracle::ec_trace({0, 0, 1, -1, 0}, static_cast<i64>(rec.q));
    const i64 q = static_cast<i64>(rec.q);
    const bool expect = q % 5 != 1 && q % 5 != 4 && oracle::md(q * a * a - q * (1 + q) * (1 + q), 5) == 0;
    EXPECT_EQ(rec.nice, expect) << q;
  }
  EXPECT_TRUE(r.records[0].nice);  // q = 2, a_2 = -2
  EXPECT_EQ(r.summary.oracle_density, Rational(1, 4));
}

TEST(Scan, ThreadCountDoesNotChangeOutput) {
  const RepSource e = EllipticCurveSource::curve_37a1();
  const auto a = scan_nice(e, 7, 2, 1, 3000, 1);
  const auto b = scan_nice(e, 7, 2, 1, 3000, 4);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].q, b.records[i].q);
    EXPECT_EQ(a.records[i].nice, b.records[i].nice);
    EXPECT_EQ(a.records[i].rho_m_nice, b.records[i].rho_m_nice);
    EXPECT_EQ(a.records[i].trace, b.records[i].trace);
    // level-m niceness implies level-1 niceness
    if (a.records[i].rho_m_nice) EXPECT_TRUE(a.records[i].nice);
  }
  EXPECT_EQ(a.summary.nice, b.summary.nice);
}

TEST(Scan, TableSourceSkipsMissingPrimes) {
  const auto t = ExplicitFrobTable::from_json(
      nlohmann::json::parse(R"({"p":5,"m":1,"k":1,"entries":{"2":{"t":3,"d":2},"11":{"t":1,"d":1}}})"));
  const auto r = scan_nice(RepSource(t), 5, 1, 1, 50, 1);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_TRUE(r.records[0].nice);   // 2 * 3^2 = 2 * (1 + 2)^2
  EXPECT_FALSE(r.records[1].nice);  // 11 = 1 mod 5
}

TEST(Cup, InvariantIsAlternatingAndBilinear) {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 300; ++iter) {
    const u64 p = iter % 2 ? 5 : 7;
    auto draw = [&](int twist) {
      return LocalClass::make(13, p, static_cast<i64>(rng() % p), static_cast<i64>(rng() % p), twist);
    };
    const auto x = draw(0), x2 = draw(0), y = draw(1);
    const auto s = cup_invariant(x, y);
    EXPECT_EQ(cup_invariant(y, x), -s);
    const LocalClass sum{13, x.unram_value + x2.unram_value, x.ram_value + x2.ram_value, 0};
    EXPECT_EQ(cup_invariant(sum, y), s + cup_invariant(x2, y));
    // two unramified classes pair to zero
    const LocalClass xu{13, x.unram_value, ResidueInt(0, p, 1), 0}, yu{13, y.unram_value, ResidueInt(0, p, 1), 1};
    EXPECT_TRUE(cup_invariant(xu, yu).is_zero());
  }
  EXPECT_EQ(cup_invariant(LocalClass::make(13, 5, 1, 0, 0), LocalClass::make(13, 5, 0, 1, 1)).value(), 1);
}

TEST(Cup, MismatchedInputsRejected) {
  const auto a = LocalClass::make(13, 5, 1, 0, 0);
  EXPECT_GLK_ERROR(cup_invariant(a, LocalClass::make(17, 5, 0, 1, 1)), ErrorCode::TwistMismatch);
  EXPECT_GLK_ERROR(cup_invariant(a, LocalClass::make(13, 5, 0, 1, 0)), ErrorCode::TwistMismatch);
  EXPECT_GLK_ERROR(cup_invariant(a, LocalClass::make(13, 7, 0, 1, 1)), ErrorCode::PrecisionMismatch);
}
