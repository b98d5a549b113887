#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "glk/charpoly/purity.hpp"
#include "glk/deform/versal.hpp"
#include "glk/local/nice.hpp"
#include "glk/selmer/chases.hpp"
#include "glk/sim/growth.hpp"
#include "glk/sim/polarisation.hpp"

namespace glk {

inline constexpr const char* kEpistemicNote =
    "synthetic: global cohomology classes and Chebotarev sets are drawn from a seeded sampler under "
    "independence assumptions; the run checks the bookkeeping of the lifting argument, not the "
    "existence of the primes or classes it assumes";

struct SimConfig {
  u64 p = 5;
  int k = 2;
  int stages = 4;
  u64 seed = 0;
  std::optional<Rational> density;  // acceptance rate for candidate nice primes
  std::vector<u64> initial_S;       // defaults to {p}
  PolarisationConfig polarisation;
  Rational epsilon{1, 2};
};

struct RPrimeChoice {
  int stage;  // stage at which r joined R
  TraceConstraint constraint;
  CharPolyChoice choice;
};

struct SimState {
  int n = 2;
  std::set<u64> S;
  std::map<u64, RPrimeChoice> R;
};

struct SimResult {
  nlohmann::json report;
  std::vector<nlohmann::json> events;
};

namespace detail {

inline nlohmann::json sorted_list(const std::set<u64>& s) { return nlohmann::json(std::vector<u64>(s.begin(), s.end())); }

template <class A, class B>
bool disjoint(const A& a, const B& b) {
  for (auto x : a)
    if (b.count(x)) return false;
  return true;
}

/// Default acceptance density: the pair-coupled oracle at (p, k); when that
/// vanishes the sampler stands in for niceness and falls back to weight 1.
inline std::pair<Rational, std::string> default_density(u64 p, int k) {
  const Rational own = nice_density_oracle(p, k, ImageKind::FullGL2).density;
  if (own > 0) return {own, ""};
  const Rational fallback = nice_density_oracle(p, 1, ImageKind::FullGL2).density;
  return {fallback, "oracle density at k = " + std::to_string(k) + " is 0 (q is never a square-ratio mod p); "
                    "nice primes are a sampler assumption and the acceptance rate uses the k = 1 density " +
                    to_string(fallback)};
}

class Driver {
 public:
  Driver(const SimConfig& cfg, SyntheticChebotarev& sampler, std::vector<nlohmann::json>& events)
      : cfg_(cfg), s_(sampler), events_(events) {}

  nlohmann::json run_stage(SimState& st) {
    const u64 p = cfg_.p;
    const int k = cfg_.k;
    const int n = st.n;
    const int m = n;
    const double T = feasibility_threshold(p, n, k);
    const double T_prev = feasibility_threshold(p, n - 1, k);
    const std::set<u64> S = st.S;
    std::set<u64> R_prev;
    for (const auto& [r, _] : st.R) R_prev.insert(r);

    // R_n: every prime below the stage threshold not in S, choices fixed once.
    std::vector<u64> R_new;
    const BigInt cmod = ipow(BigInt(p), static_cast<unsigned>(n - 1));
    for (u64 r = 2; static_cast<double>(r) < T; r = next_prime(r)) {
      if (!is_prime(r) || S.count(r) || st.R.count(r)) continue;
      const TraceConstraint c{p, n - 1, BigInt(s_.below(static_cast<u64>(cmod)))};
      auto choice = purity_window(r, k, p, n - 1, c.t);
      if (!choice) choice = purity_window(r, k, p, n - 1, c.t, PurityOptions{false});
      st.R.emplace(r, RPrimeChoice{n, c, *choice});
      R_new.push_back(r);
      events_.push_back({{"stage", n}, {"event", "r_choice"}, {"choice", choice->to_json()},
                         {"trace_mod", cmod.str()}, {"t", c.t.str()}});
    }
    std::set<u64> R;
    for (const auto& [r, _] : st.R) R.insert(r);

    // Q_n size from the unramified chase: one nice prime per unit of h0 on S u R.
    Ledger before;
    for (u64 v : S) before.add(detail::silent_place("s" + std::to_string(v)));
    for (u64 r : R) before.add(detail::silent_place("r" + std::to_string(r)));
    const int q_count = -wiles_difference(before);

    cursor_ = std::max<u64>(cursor_, static_cast<u64>(std::floor(T)));
    std::set<u64> Q, V;
    auto fresh_nice = [&]() {
      for (;;) {
        cursor_ = next_prime(cursor_);
        const u64 q = cursor_;
        if (q == p || S.count(q) || R.count(q) || !is_nice_residue(q, p)) continue;
        if (s_.accept()) return q;
      }
    };

    nlohmann::json records = nlohmann::json::array();
    bool unobstructed_ok = true, reciprocity_ok = true, polarisation_ok = true;
    std::size_t singletons = 0, lifts_checked = 0;
    const BigInt pm1 = ipow(BigInt(p), static_cast<unsigned>(m - 1));
    for (int i = 0; i < q_count; ++i) {
      const u64 q = fresh_nice();
      Q.insert(q);
      const PolarisationResult pol = find_polarisation_pair(s_, fresh_nice, cfg_.polarisation);
      for (u64 t : pol.labels) V.insert(t);
      singletons += pol.singleton;
      polarisation_ok = polarisation_ok && check_polarisation(pol);
      if (!pol.singleton) {
        reciprocity_ok = reciprocity_ok && reciprocity_audit(pol.invariants);
      }

      // Local lift at q with a random first-order obstruction, then corrected
      // by the polarising class, whose value at sigma_q is f_k(sigma_q).
      const u64 alpha = s_.residue();
      const LocalLift raw = versal_lift(q, p, m, alpha * pm1, p * BigInt(s_.below(static_cast<u64>(pm1))), s_.nonzero());
      const ResidueInt fq(BigInt(pol.fk_at_q), p, 1);
      const u64 beta = correct_obstruction(raw, fq);
      const LocalLift fixed = twist_by_class(raw, beta, fq.value());
      const bool q_ok = fixed.tame_relation_holds() && is_unobstructed(fixed);
      unobstructed_ok = unobstructed_ok && q_ok;
      ++lifts_checked;
      events_.push_back({{"stage", n}, {"event", "q_lift"}, {"alpha", alpha}, {"beta", beta},
                         {"polarisation", pol.to_json()}, {"lift", fixed.to_json()}});

      for (u64 t : pol.labels) {
        const LocalLift lt = versal_lift(t, p, m, 0, p * BigInt(s_.below(static_cast<u64>(pm1))), s_.nonzero());
        const bool t_ok = lt.tame_relation_holds() && is_unobstructed(lt);
        unobstructed_ok = unobstructed_ok && t_ok;
        ++lifts_checked;
        events_.push_back({{"stage", n}, {"event", "v_lift"}, {"q", q}, {"lift", lt.to_json()}});
      }
      records.push_back({{"q", q}, {"alpha", alpha}, {"beta", beta}, {"polarisation", pol.to_json()},
                         {"residual_density", to_string(density_shrink(s_.density(), p,
                                                                       static_cast<unsigned>(pol.pairs_tried)))}});
    }

    // Ledger audits.
    Ledger after = before;
    for (u64 q : Q) after.add(PlaceEntry::nice("q" + std::to_string(q), 2));
    const int dn = static_cast<int>(Q.size());
    const int dd = static_cast<int>(S.size());
    bool ledger_ok = wiles_difference(before) == -q_count && wiles_difference(after) == 0;
    nlohmann::json chase_json = nlohmann::json::object();
    if (dn >= 1) {
      const Chase L = polarisation_L_chase(dn, dd), M = polarisation_M_chase(dn, dd);
      ledger_ok = ledger_ok && L.before_value() == -2 * dn - dd + 1 && L.after_value() == -2 * dn - dd + 2 &&
                  M.before_value() == -2 * dn - dd && M.after_value() == -2 * dn - dd + 1;
      chase_json = {{"n", dn}, {"d", dd}, {"L", {L.before_value(), L.after_value()}},
                    {"M", {M.before_value(), M.after_value()}}};
    }

    // Purity: new R-primes above the previous threshold must be pure; every
    // choice must meet its congruence.
    std::size_t purity_checked = 0, pure_count = 0;
    bool purity_ok = true;
    for (u64 r : R_new) {
      const auto& rc = st.R.at(r);
      purity_ok = purity_ok && mod_floor(rc.choice.a - rc.constraint.t, rc.constraint.modulus()) == 0;
      if (above_threshold(r, rc.constraint.modulus(), k)) {
        ++purity_checked;
        pure_count += rc.choice.pure;
        purity_ok = purity_ok && rc.choice.pure;
      }
    }

    // Set algebra.
    bool sets_ok = disjoint(S, Q) && disjoint(S, V) && disjoint(Q, V) && disjoint(R, S) && disjoint(R, Q) &&
                   disjoint(R, V) && std::includes(R.begin(), R.end(), R_prev.begin(), R_prev.end()) &&
                   V.size() <= 2 * Q.size();
    for (u64 q : Q) sets_ok = sets_ok && static_cast<double>(q) > T;

    std::set<u64> S_next = S;
    S_next.insert(Q.begin(), Q.end());
    S_next.insert(V.begin(), V.end());

    nlohmann::json block{
        {"n", n},
        {"m", m},
        {"thresholds", {{"stage_threshold", T}, {"previous_threshold", T_prev}}},
        {"sizes", {{"S", S.size()}, {"R", R.size()}, {"R_new", R_new.size()}, {"Q", Q.size()}, {"V", V.size()}}},
        {"sets", {{"S", sorted_list(S)}, {"R", sorted_list(R)}, {"Q", sorted_list(Q)}, {"V", sorted_list(V)}}},
        {"ledger_audit", {{"before", wiles_difference(before)}, {"after", wiles_difference(after)},
                          {"polarisation_chases", chase_json}, {"ok", ledger_ok}}},
        {"purity_audit", {{"new_r_primes", R_new.size()}, {"checked", purity_checked}, {"pure", pure_count},
                          {"ok", purity_ok}}},
        {"set_audit", {{"ok", sets_ok}}},
        {"unobstructed_audit", {{"lifts", lifts_checked}, {"ok", unobstructed_ok}}},
        {"reciprocity_audit", {{"ok", reciprocity_ok}}},
        {"polarisation_audit", {{"singletons", singletons}, {"ok", polarisation_ok}}},
        {"polarisation_records", records}};

    const bool all_ok = ledger_ok && purity_ok && sets_ok && unobstructed_ok && reciprocity_ok && polarisation_ok;
    block["all_audits_ok"] = all_ok;
    events_.push_back({{"stage", n}, {"event", "stage_done"}, {"all_audits_ok", all_ok}});
    if (!all_ok) {
      nlohmann::json diag{{"stage", n},          {"ledger", ledger_ok},           {"purity", purity_ok},
                          {"sets", sets_ok},     {"unobstructed", unobstructed_ok}, {"reciprocity", reciprocity_ok},
                          {"polarisation", polarisation_ok}};
      fail(ErrorCode::StageInvariantViolated, diag.dump());
    }

    st.S = std::move(S_next);
    st.n = n + 1;
    return block;
  }

  static bool check_polarisation(const PolarisationResult& r) {
    if (r.singleton) return r.labels.size() == 1 && r.fk_at_t == std::vector<u64>{0} && r.fk_at_q != 0;
    const auto& b = r.block;
    const u64 p = r.invariants.empty() ? 0 : r.invariants[0].p();
    if (p == 0) return false;
    const bool singular = (b[0][0] * b[1][1] + p * p - b[0][1] * b[1][0] % p) % p == 0;
    const bool unequal = b[0] != b[1];
    return r.labels.size() == 2 && singular && unequal && r.fk_at_t == std::vector<u64>{0, 0} && r.fk_at_q != 0;
  }

 private:
  const SimConfig& cfg_;
  SyntheticChebotarev& s_;
  std::vector<nlohmann::json>& events_;
  u64 cursor_ = 0;
};

}  // namespace detail

/// Stages n = 2, ..., stages + 1 of the lifting driver, then the growth schedule.
inline SimResult simulate(SimConfig cfg) {
  require(is_prime(cfg.p) && cfg.p >= 5, ErrorCode::InvalidArgument, "p must be prime >= 5");
  require(cfg.k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  require(cfg.stages >= 1 && cfg.stages <= 8, ErrorCode::InvalidArgument, "stages must be in [1, 8]");
  std::string density_note;
  if (!cfg.density) std::tie(cfg.density, density_note) = detail::default_density(cfg.p, cfg.k);
  const Rational oracle = nice_density_oracle(cfg.p, cfg.k, ImageKind::FullGL2).density;

  SimResult out;
  SyntheticChebotarev sampler(cfg.seed, cfg.p, *cfg.density);
  detail::Driver driver(cfg, sampler, out.events);
  SimState st;
  if (cfg.initial_S.empty()) cfg.initial_S = {cfg.p};
  st.S.insert(cfg.initial_S.begin(), cfg.initial_S.end());
  require(st.S.count(cfg.p) == 1, ErrorCode::InvalidArgument, "S must contain p");

  nlohmann::json header{{"seed", cfg.seed},
                        {"p", cfg.p},
                        {"k", cfg.k},
                        {"stages", cfg.stages},
                        {"epistemic_note", kEpistemicNote},
                        {"density", to_string(*cfg.density)},
                        {"oracle_density", to_string(oracle)},
                        {"gamma", to_string(gamma_constant(cfg.p))}};
  if (!density_note.empty()) header["density_warning"] = density_note;

  nlohmann::json blocks = nlohmann::json::array();
  for (int i = 0; i < cfg.stages; ++i) blocks.push_back(driver.run_stage(st));

  const auto schedule = growth_schedule(NiceCounter::synthetic(*cfg.density), cfg.stages);
  const auto violation = growth_violation_check(schedule, cfg.epsilon);

  out.report = {{"header", header},
                {"stages", blocks},
                {"growth", growth_to_json(schedule, violation)},
                {"draws", sampler.draws()}};
  return out;
}

}  // namespace glk
