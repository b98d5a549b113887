#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include <json.hpp>

#include "glk/local/cup.hpp"
#include "glk/sim/sampler.hpp"

namespace glk {

/// gamma = 1 - (p-2)/p^2: the chance a random pair fails to polarise.
inline Rational gamma_constant(u64 p) {
  require(is_prime(p) && p >= 5, ErrorCode::InvalidArgument, "gamma needs p >= 5");
  const BigInt pp = BigInt(p) * p;
  return Rational(pp - (p - 2), pp);
}

/// D * gamma^n, exactly.
inline Rational density_shrink(const Rational& D, u64 p, unsigned n) {
  require(D > 0 && D <= 1, ErrorCode::InvalidArgument, "density must lie in (0, 1]");
  const Rational g = gamma_constant(p);
  Rational out = D;
  for (unsigned i = 0; i < n; ++i) out *= g;
  return out;
}

/// Synthetic data of one candidate class f_t at a nice prime t, with
/// f_t(sigma_q) normalized to 1.
struct CocycleProfile {
  u64 label;
  u64 y;        // f_t(sigma_t)
  u64 z;        // invariant of f_{t,mu_p} cup g_t
  u64 phi_ram;  // ramified value of phi_t at tau_t (nonzero)
  u64 q_value = 1;
};

inline CocycleProfile draw_profile(SyntheticChebotarev& s, u64 label) {
  CocycleProfile c;
  c.label = label;
  c.y = s.residue();
  // f_{t,mu_p} is ramified at t and g_t unramified with g_t(sigma_t) = 1, so
  // the invariant is the ramified value itself.
  const u64 w = s.nonzero();
  c.z = static_cast<u64>(cup_invariant(LocalClass::make(label, s.p(), 1, 0, 0),
                                       LocalClass::make(label, s.p(), 0, static_cast<i64>(w), 1))
                             .value());
  c.phi_ram = s.nonzero();
  return c;
}

struct MajorityClass {
  u64 y;
  std::vector<std::size_t> Y;  // indices into the sample
  u64 z;
  std::vector<std::size_t> Z;
};

/// Modal nonzero self-value, then modal invariant inside that class; ties go
/// to the smallest residue.
inline MajorityClass majority_class_filter(const std::vector<CocycleProfile>& sample) {
  std::map<u64, std::size_t> ys;
  for (const auto& c : sample)
    if (c.y != 0) ++ys[c.y];
  require(!ys.empty(), ErrorCode::EmptySample, "no profile with a nonzero self-value");
  auto mode = [](const std::map<u64, std::size_t>& counts) {
    u64 best = counts.begin()->first;
    std::size_t n = 0;
    for (const auto& [v, c] : counts)
      if (c > n) best = v, n = c;  // strict: the first (smallest) value keeps ties
    return best;
  };
  MajorityClass out;
  out.y = mode(ys);
  std::map<u64, std::size_t> zs;
  for (std::size_t i = 0; i < sample.size(); ++i)
    if (sample[i].y == out.y) out.Y.push_back(i), ++zs[sample[i].z];
  out.z = mode(zs);
  for (auto i : out.Y)
    if (sample[i].z == out.z) out.Z.push_back(i);
  return out;
}

/// Local invariants of a global class must sum to zero.
inline bool reciprocity_audit(const std::vector<ResidueInt>& invariants) {
  if (invariants.empty()) return true;
  ResidueInt sum = invariants[0].with_value(0);
  for (const auto& x : invariants) sum += x;
  return sum.is_zero();
}

struct PolarisationConfig {
  std::size_t initial_sample = 8;
  std::size_t profile_budget = 4096;
};

struct PolarisationResult {
  bool singleton = false;
  std::vector<u64> labels;
  std::vector<u64> alphas;
  u64 y = 0;
  u64 z = 0;
  std::array<std::array<u64, 2>, 2> block{};  // block[i][j] = f_{t_i}(sigma_{t_j})
  std::vector<u64> fk_at_t;
  u64 fk_at_q = 0;
  std::vector<ResidueInt> invariants;  // at t_1, t_2 (pair case)
  std::size_t profiles_drawn = 0;
  std::size_t pairs_tried = 0;

  nlohmann::json to_json() const {
    nlohmann::json inv = nlohmann::json::array();
    for (const auto& x : invariants) inv.push_back(static_cast<u64>(x.value()));
    nlohmann::json j{{"singleton", singleton}, {"labels", labels},  {"alphas", alphas},
                     {"y", y},                 {"fk_at_t", fk_at_t}, {"fk_at_q", fk_at_q},
                     {"profiles_drawn", profiles_drawn}, {"pairs_tried", pairs_tried}};
    if (!singleton) {
      j["z"] = z;
      j["block"] = {{block[0][0], block[0][1]}, {block[1][0], block[1][1]}};
      j["invariants"] = inv;
    }
    return j;
  }
};

/// One or two auxiliary classes whose combination vanishes at their own
/// Frobenius elements but not at sigma_q.
///
/// A profile with y = 0 already does this alone. Otherwise, for t1, t2 in the
/// majority class, a = f_{t1}(sigma_{t2}) is drawn and f_{t2}(sigma_{t1}) is
/// forced by reciprocity for the global class phi_{t1}: its invariants at t1
/// and t2 must cancel. The pair works when the 2x2 block
///   (y, a ; y^2/a, y)
/// is singular with unequal rows, i.e. a not in {0, y} and f_{t2}(sigma_{t1}) = y^2/a.
inline PolarisationResult find_polarisation_pair(SyntheticChebotarev& s, const std::function<u64()>& next_label,
                                                 const PolarisationConfig& cfg = {}) {
  const u64 p = s.p();
  require(p >= 5, ErrorCode::InvalidArgument, "polarisation needs p >= 5");
  const ResidueInt zero(0, p, 1);
  PolarisationResult res;
  std::vector<CocycleProfile> sample;

  auto singleton = [&](const CocycleProfile& c) {
    res.singleton = true;
    res.labels = {c.label};
    res.alphas = {1};
    res.fk_at_t = {c.y};
    res.fk_at_q = c.q_value;
    return res;
  };
  auto draw = [&]() -> const CocycleProfile& {
    if (sample.size() >= cfg.profile_budget) {
      fail(ErrorCode::ExhaustedStream, "no polarising pair after " + std::to_string(sample.size()) + " profiles");
    }
    sample.push_back(draw_profile(s, next_label()));
    res.profiles_drawn = sample.size();
    return sample.back();
  };

  for (std::size_t i = 0; i < std::max<std::size_t>(1, cfg.initial_sample); ++i) draw();
  for (const auto& c : sample)
    if (c.y == 0) return singleton(c);

  const MajorityClass mc = majority_class_filter(sample);
  res.y = mc.y;
  res.z = mc.z;
  const ResidueInt y = zero.with_value(mc.y), z = zero.with_value(mc.z);

  // Try (t1, t2) for a new member t2 against every earlier member t1.
  auto try_pair = [&](const CocycleProfile& t1, const CocycleProfile& t2) -> bool {
    ++res.pairs_tried;
    const ResidueInt a = zero.with_value(s.residue());          // f_{t1}(sigma_{t2})
    const ResidueInt b = zero.with_value(s.residue());          // phi_{t1}(sigma_{t2})
    const ResidueInt c = zero.with_value(t1.phi_ram);
    const ResidueInt inv_t2 = cup_invariant(LocalClass{t2.label, b, zero, 0}, LocalClass{t2.label, zero, z, 1});
    const ResidueInt x21 = -(inv_t2 / c);                       // f_{t2}(sigma_{t1})
    const ResidueInt inv_t1 = cup_invariant(LocalClass{t1.label, x21, zero, 0}, LocalClass{t1.label, zero, c, 1});
    if (a.is_zero() || a == y || x21 != y * y / a) return false;
    const ResidueInt alpha2 = zero.with_value(1);
    const ResidueInt alpha1 = -(y / a);
    res.labels = {t1.label, t2.label};
    res.alphas = {static_cast<u64>(alpha1.value()), static_cast<u64>(alpha2.value())};
    res.block = {{{mc.y, static_cast<u64>(a.value())}, {static_cast<u64>(x21.value()), mc.y}}};
    res.fk_at_t = {static_cast<u64>((alpha1 * y + alpha2 * x21).value()),
                   static_cast<u64>((alpha1 * a + alpha2 * y).value())};
    res.fk_at_q = static_cast<u64>((alpha1 + alpha2).value());
    res.invariants = {inv_t1, inv_t2};
    return true;
  };

  std::vector<std::size_t> members;
  for (auto idx : mc.Z) {
    for (auto prev : members)
      if (try_pair(sample[prev], sample[idx])) return res;
    members.push_back(idx);
  }
  for (;;) {
    const CocycleProfile& c = draw();
    if (c.y == 0) return singleton(c);
    if (c.y != mc.y || c.z != mc.z) continue;
    const std::size_t idx = sample.size() - 1;
    for (auto prev : members)
      if (try_pair(sample[prev], sample[idx])) return res;
    members.push_back(idx);
  }
}

}  // namespace glk
