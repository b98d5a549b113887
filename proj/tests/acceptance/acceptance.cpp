// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "../unit/generators.hpp"
#include "glk/glk.hpp"

using namespace glk;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " (" << std::fixed;
  line.precision(3);
  line << secs << " s, budget " << budget_s << " s)";
  if (!in_time) line << " over budget;";
  if (!o.detail.empty()) line << " " << o.detail;
  std::cout << line.str() << std::endl;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GLK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool stage_audits_ok(const json& st) {
  for (const char* key : {"ledger_audit", "purity_audit", "set_audit", "unobstructed_audit", "reciprocity_audit",
                          "polarisation_audit"})
    if (!st.at(key).at("ok").get<bool>()) return false;
  return st.at("all_audits_ok").get<bool>();
}

}  // namespace

int main() {
  criterion(1, 1.0, [] {
    std::mt19937_64 rng(20240601);
    const std::vector<u64> ps{5, 7, 11, 13};
    const auto primes = prime_sieve(10000);
    const LocalDims want{1, 2, 1, 1};
    int tried = 0;
    while (tried < 50) {
      const u64 p = ps[rng() % ps.size()];
      const u64 q = primes[rng() % primes.size()];
      if (q == p || !is_nice_residue(q, p)) continue;
      ++tried;
      const auto [ad, dual] = ad0_local_dims(q, p);
      if (!(ad == want && dual == want)) return Outcome{false, "q=" + std::to_string(q) + " p=" + std::to_string(p)};
    }
    return Outcome{true, "50 pairs (q, p) give (1,2,1), h1_nr = 1"};
  });

  criterion(2, 1.0, [] {
    const auto zm = SplittingFieldSource::zeh_marschke();
    if (frobenius_order(zm, 7) != 3) return Outcome{false, "order at 7 != 3"};
    for (u64 q : {2, 19, 367}) {
      try {
        frobenius_order(zm, q);
        return Outcome{false, "no error at q=" + std::to_string(q)};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RamifiedDiscriminant) return Outcome{false, "wrong error at q=" + std::to_string(q)};
      }
    }
    return Outcome{true, "order 3 at q=7; 2, 19, 367 ramified"};
  });

  criterion(3, 5.0, [] {
    std::size_t count = 0;
    for (u64 r : primes_in_range(157, 2000)) {
      for (i64 t = 0; t < 25; ++t) {
        if (!purity_window(r, 1, 5, 2, t)) return Outcome{false, "infeasible at r=" + std::to_string(r)};
      }
      ++count;
    }
    if (purity_window(29, 1, 5, 2, 12)) return Outcome{false, "(29, 12) should be infeasible"};
    return Outcome{true, std::to_string(count) + " primes x 25 residues feasible; (29,12) infeasible"};
  });

  criterion(4, 1.0, [] {
    int ledgers = 0;
    for (int n = 1; n <= 10; ++n)
      for (int d = 1; d <= 10; ++d) {
        const auto u = unram_chase(n);
        const auto l = polarisation_L_chase(n, d);
        const auto m = polarisation_M_chase(n, d);
        ledgers += 3;
        if (u.before_value() != -n || u.after_value() != 0 || l.before_value() != -2 * n - d + 1 ||
            l.after_value() != -2 * n - d + 2 || m.before_value() != -2 * n - d || m.after_value() != -2 * n - d + 1)
          return Outcome{false, "n=" + std::to_string(n) + " d=" + std::to_string(d)};
      }
    return Outcome{true, std::to_string(ledgers) + " chases match their closed forms"};
  });

  criterion(5, 60.0, [] {
    const auto res = scan_nice(EllipticCurveSource::curve_37a1(), 5, 1, 1, 100000);
    const double n = static_cast<double>(res.summary.scanned);
    const double freq = static_cast<double>(res.summary.nice) / n;
    const double sigma = std::sqrt(0.25 * 0.75 / n);
    const double z = (freq - 0.25) / sigma;
    std::ostringstream d;
    d << res.summary.nice << "/" << res.summary.scanned << " nice, freq " << freq << ", z = " << z;
    return Outcome{std::fabs(z) <= 3.0 && res.summary.oracle_density == Rational(1, 4), d.str()};
  });

  criterion(6, 5.0, [] {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 200; ++i) {
      const u64 p = i % 2 ? 5 : 7;
      const int m = 1 + i % 3;
      const auto rho = gen::homomorphism(rng, p, m + 1);
      const auto rhobar = rho.reduce(1);
      const auto f = gen::cocycle(rng, rhobar);
      const auto t = twist(rho, f);
      if (!t.is_homomorphism()) return Outcome{false, "twist not a homomorphism at sample " + std::to_string(i)};
      for (std::size_t g = 0; g < f.values.size(); ++g)
        if (t.images()[g].det() != rho.images()[g].det()) return Outcome{false, "determinant moved at " + std::to_string(i)};
      const Mat2 c = gen::trace_zero(rng, p);
      const auto tb = twist(rho, coboundary(rhobar, c));
      const BigInt pm = ipow(BigInt(p), static_cast<unsigned>(m));
      const ResidueInt z(0, p, m + 1);
      const Mat2 h(z.with_value(1 - pm * c.a().value()), z.with_value(-pm * c.b().value()),
                   z.with_value(-pm * c.c().value()), z.with_value(1 - pm * c.d().value()));
      if (tb != rho.conjugate(h)) return Outcome{false, "coboundary twist not conjugate at " + std::to_string(i)};
    }
    return Outcome{true, "200 pairs: homomorphism, conjugate coboundaries, determinant kept"};
  });

  criterion(7, 10.0, [] {
    int singles = 0;
    for (u64 seed = 0; seed < 1000; ++seed) {
      const u64 p = seed % 2 ? 5 : 7;
      SyntheticChebotarev s(seed, p, Rational(1, 4));
      SyntheticChebotarev replay = s;
      u64 label = 1;
      const auto r = find_polarisation_pair(s, [&] { return label++; });
      if (!detail::Driver::check_polarisation(r)) return Outcome{false, "postcondition at seed " + std::to_string(seed)};
      if (!r.singleton && !reciprocity_audit(r.invariants)) return Outcome{false, "reciprocity at " + std::to_string(seed)};
      // a y = 0 profile in the initial sample must end the search as a singleton on the first one
      std::optional<u64> first_zero;
      u64 l2 = 1;
      for (std::size_t i = 0; i < PolarisationConfig{}.initial_sample; ++i) {
        const auto c = draw_profile(replay, l2++);
        if (c.y == 0 && !first_zero) first_zero = c.label;
      }
      if (first_zero && (!r.singleton || r.labels != std::vector<u64>{*first_zero}))
        return Outcome{false, "shortcut missed at seed " + std::to_string(seed)};
      singles += r.singleton;
    }
    return Outcome{true, "1000 searches, " + std::to_string(singles) + " singletons"};
  });

  criterion(8, 30.0, [] {
    const auto dir = std::filesystem::temp_directory_path() / "glk_acceptance";
    std::filesystem::create_directories(dir);
    const std::string a = (dir / "run_a.json").string(), b = (dir / "run_b.json").string();
    const std::string args = "lift simulate --p 5 --k 2 --stages 4 --seed 42 --out ";
    if (run_cli(args + a) != 0 || run_cli(args + b) != 0) return Outcome{false, "CLI exited nonzero"};
    json ja = json::parse(std::ifstream(a)), jb = json::parse(std::ifstream(b));
    for (const auto& st : ja.at("stages"))
      if (!stage_audits_ok(st)) return Outcome{false, "audit false at stage " + st.at("n").dump()};
    ja["manifest"].erase("timestamp");
    jb["manifest"].erase("timestamp");
    if (ja.dump() != jb.dump()) return Outcome{false, "runs differ beyond the timestamp"};
    return Outcome{true, std::to_string(ja.at("stages").size()) + " stages, all audits true, reruns identical"};
  });

  criterion(9, 5.0, [] {
    const auto sched = growth_schedule(NiceCounter::synthetic(Rational(1, 5)), 4);
    const auto rep = growth_violation_check(sched, Rational(1, 2));
    const std::vector<Rational> want{2, Rational(3, 2), Rational(5, 4), Rational(9, 8)};
    if (!sched[0].f || *sched[0].f != 149) return Outcome{false, "f1 != 149"};
    for (int i = 0; i < 4; ++i)
      if (sched[i].exponent != want[i]) return Outcome{false, "exponent mismatch at stage " + std::to_string(i + 1)};
    bool increasing = rep.first_checked == 3;
    for (int i = 3; i < 4; ++i) increasing = increasing && rep.rows[i].log_rho > rep.rows[i - 1].log_rho;
    if (!increasing || rep.status != "violation") return Outcome{false, "ratio not increasing from stage 3"};
    return Outcome{true, "f1 = 149, exponents 2, 3/2, 5/4, 9/8; ratio increases from stage 3"};
  });

  criterion(10, 1.0, [] {
    const Mat2 x = teichmuller_lift(Mat2::from_ints(2, 0, 0, 1, 5, 1), 2);
    if (x != Mat2::from_ints(7, 0, 0, 1, 5, 2) || multiplicative_order(x, 100) != 4u)
      return Outcome{false, "diag(2,1) lifted to " + x.str()};
    std::mt19937_64 rng(1010);
    int done = 0;
    while (done < 100) {
      const u64 p = done % 2 ? 5 : 7;
      const Mat2 g = gen::invertible(rng, p, 1);
      const auto n = multiplicative_order(g, p * p);
      if (!n || *n % p == 0) continue;
      const int m = 2 + done % 3;
      const Mat2 y = teichmuller_lift(g, m);
      if (y.reduce(1) != g || multiplicative_order(y, p * p) != n) return Outcome{false, "round trip failed for " + g.str()};
      ++done;
    }
    return Outcome{true, "diag(7,1) mod 25 of order 4; 100 round trips"};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
