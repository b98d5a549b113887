// glk: command-line front end.
//
// Exit codes: 0 success (negative answers included), 2 usage or malformed
// input, 3 domain errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glk/glk.hpp"
#include "glk/io/manifest.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

glk::BigInt parse_int(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\r') t += c;
  if (t.empty()) throw UsageError("empty integer");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw UsageError("bad integer '" + s + "'");
  for (std::size_t j = i; j < t.size(); ++j)
    if (t[j] < '0' || t[j] > '9') throw UsageError("bad integer '" + s + "'");
  return glk::BigInt(t);
}

std::vector<glk::BigInt> parse_list(const std::string& s) {
  std::vector<glk::BigInt> out;
  for (const auto& x : split(s, ',')) out.push_back(parse_int(x));
  return out;
}

glk::Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const glk::BigInt d = parse_int(s.substr(slash + 1));
    if (d == 0) throw UsageError("zero denominator in '" + s + "'");
    return glk::Rational(parse_int(s.substr(0, slash)), d);
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return glk::Rational(parse_int(s));
  const std::string frac = s.substr(dot + 1);
  const std::string whole = s.substr(0, dot);
  const glk::BigInt den = glk::ipow(10, static_cast<unsigned>(frac.size()));
  const bool neg = !whole.empty() && whole[0] == '-';
  const glk::BigInt w = (whole.empty() || whole == "-" || whole == "+") ? glk::BigInt(0) : parse_int(whole);
  const glk::BigInt f = frac.empty() ? glk::BigInt(0) : parse_int(frac);
  return glk::Rational(w * den + (neg ? -f : f), den);
}

void require_p(glk::u64 p) {
  if (!glk::is_prime(p) || p < 5) throw UsageError("p must be prime ≥ 5");
}

void emit(const json& j, const std::string& path = "") {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) std::cout << text;
  else glk::write_file(path, text);
}

glk::RunManifest manifest(const std::string& command, json params) {
  glk::RunManifest m;
  m.command = command;
  m.params = std::move(params);
  return m;
}

json choice_json(const std::optional<glk::CharPolyChoice>& c) {
  if (!c) return {{"infeasible", true}};
  json j = c->to_json();
  j["infeasible"] = false;
  if (boost::multiprecision::abs(c->a) < glk::BigInt(1) << 62) j["a"] = static_cast<long long>(c->a);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation-lifting toolkit: nice primes, local data, ledgers, purity, simulation"};
  app.set_version_flag("--version", GLK_VERSION);
  app.require_subcommand(1);

  // nice scan / nice density
  auto* nice = app.add_subcommand("nice", "nice-prime scanning and densities");
  nice->require_subcommand(1);
  auto* scan = nice->add_subcommand("scan", "scan primes for niceness");
  std::string curve_spec, table_path, out_path, summary_path;
  glk::u64 p = 0, limit = 0;
  int m = 1, k = 1;
  unsigned threads = 0;
  scan->add_option("--curve", curve_spec, "Weierstrass a1,a2,a3,a4,a6");
  scan->add_option("--table", table_path, "explicit Frobenius table (JSON)");
  scan->add_option("--p", p, "residual prime")->required();
  scan->add_option("--m", m, "precision exponent");
  scan->add_option("--k", k, "determinant weight");
  scan->add_option("--limit", limit, "largest q to scan")->required();
  scan->add_option("--out", out_path, "CSV output path (default stdout)");
  scan->add_option("--summary", summary_path, "summary JSON path");
  scan->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* density = nice->add_subcommand("density", "oracle density of nice primes");
  std::string image = "full";
  density->add_option("--p", p, "residual prime")->required();
  density->add_option("--k", k, "determinant weight");
  density->add_option("--image", image, "full or sl2")->check(CLI::IsMember({"full", "sl2"}));

  // frob order
  auto* frob = app.add_subcommand("frob", "Frobenius data of a splitting field");
  frob->require_subcommand(1);
  auto* order = frob->add_subcommand("order", "order of Frobenius at q");
  std::string poly_spec;
  bool zm = false;
  glk::u64 q = 0;
  order->add_option("--poly", poly_spec, "monic coefficients, highest degree first");
  order->add_flag("--zeh-marschke", zm, "use the degree-7 Zeh-Marschke polynomial");
  order->add_option("--q", q, "prime")->required();

  // purity window
  auto* purity = app.add_subcommand("purity", "pure characteristic polynomials");
  purity->require_subcommand(1);
  auto* window = purity->add_subcommand("window", "minimal pure trace in a residue class");
  glk::u64 r = 0;
  std::string trace_s, batch_path;
  bool no_purity = false;
  window->add_option("--p", p, "prime of the constraint")->required();
  window->add_option("--m", m, "precision exponent")->required();
  window->add_option("--k", k, "weight")->required();
  window->add_option("--r", r, "prime r");
  window->add_option("--trace", trace_s, "residue t mod p^m");
  window->add_option("--batch", batch_path, "CSV of r,t rows");
  window->add_flag("--no-purity", no_purity, "skip the purity bound (allows k = 0)");

  // compatible
  auto* compat = app.add_subcommand("compatible", "common trace for two congruences");
  std::string c1, c2;
  compat->add_option("--r", r, "prime r")->required();
  compat->add_option("--k", k, "weight")->required();
  compat->add_option("--c1", c1, "p,m,t")->required();
  compat->add_option("--c2", c2, "q,m',t")->required();

  // selmer ledger
  auto* selmer = app.add_subcommand("selmer", "Selmer dimension bookkeeping");
  selmer->require_subcommand(1);
  auto* ledger_cmd = selmer->add_subcommand("ledger", "evaluate a ledger");
  std::string ledger_path, chase_spec;
  ledger_cmd->add_option("file,--file", ledger_path, "ledger JSON");
  ledger_cmd->add_option("--chase", chase_spec, "unram:N, L:N,D or M:N,D");

  // lift simulate
  auto* lift = app.add_subcommand("lift", "synthetic lifting driver");
  lift->require_subcommand(1);
  auto* sim = lift->add_subcommand("simulate", "run the staged simulation");
  int stages = 4;
  glk::u64 seed = 0;
  std::string density_s, events_path;
  sim->add_option("--p", p, "residual prime")->required();
  sim->add_option("--k", k, "weight")->required();
  sim->add_option("--stages", stages, "number of stages");
  sim->add_option("--seed", seed, "RNG seed");
  sim->add_option("--density", density_s, "candidate acceptance density (rational or decimal)");
  sim->add_option("--out", out_path, "report path (default stdout)");
  sim->add_option("--events", events_path, "JSON-lines event log path");

  // growth schedule
  auto* growth = app.add_subcommand("growth", "growth-rate schedule");
  growth->require_subcommand(1);
  auto* sched = growth->add_subcommand("schedule", "minimal f_n per stage");
  std::string epsilon_s = "1/2";
  sched->add_option("--density", density_s, "synthetic density D");
  sched->add_option("--curve", curve_spec, "empirical: scan this curve instead");
  sched->add_option("--p", p, "residual prime for --curve");
  sched->add_option("--limit", limit, "scan bound for --curve");
  sched->add_option("--stages", stages, "number of stages");
  sched->add_option("--epsilon", epsilon_s, "epsilon for the violation check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string cmdline = [&] {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
  }();

  try {
    if (*scan) {
      require_p(p);
      if (m < 1) throw UsageError("m must be >= 1");
      if (curve_spec.empty() == table_path.empty()) throw UsageError("give exactly one of --curve or --table");
      auto mf = manifest("nice scan", {{"p", p}, {"m", m}, {"k", k}, {"limit", limit}, {"argv", cmdline}});
      std::optional<glk::RepSource> source;
      if (!curve_spec.empty()) {
        const auto a = parse_list(curve_spec);
        if (a.size() != 5) throw UsageError("--curve needs five coefficients a1,a2,a3,a4,a6");
        source.emplace(glk::EllipticCurveSource(static_cast<glk::i64>(a[0]), static_cast<glk::i64>(a[1]),
                                                static_cast<glk::i64>(a[2]), static_cast<glk::i64>(a[3]),
                                                static_cast<glk::i64>(a[4])));
        mf.params["curve"] = curve_spec;
      } else {
        const std::string text = glk::read_file(table_path);
        mf.add_input(table_path, text);
        json j;
        try {
          j = json::parse(text);
        } catch (const json::exception& e) {
          throw UsageError(std::string("table is not JSON: ") + e.what());
        }
        source.emplace(glk::ExplicitFrobTable::from_json(j));
      }
      const auto res = glk::scan_nice(*source, p, m, k, limit, threads);
      std::ostringstream csv;
      csv << "q,is_nice,is_rho_m_nice,trace_mod_p_m\n";
      for (const auto& rec : res.records)
        csv << rec.q << ',' << (rec.nice ? "true" : "false") << ',' << (rec.rho_m_nice ? "true" : "false") << ','
            << rec.trace.str() << '\n';
      if (out_path.empty()) std::cout << csv.str();
      else glk::write_file(out_path, csv.str());
      const auto& s = res.summary;
      json summary{{"scanned", s.scanned},
                   {"nice", s.nice},
                   {"rho_m_nice", s.rho_m_nice},
                   {"empirical_density", glk::to_string(s.empirical_density)},
                   {"oracle_density", s.oracle_density ? json(glk::to_string(*s.oracle_density)) : json(nullptr)},
                   {"manifest", mf.to_json()}};
      if (!summary_path.empty()) emit(summary, summary_path);
      else if (!out_path.empty()) emit(summary);
      else std::cerr << summary.dump() << "\n";
      return 0;
    }

    if (*density) {
      require_p(p);
      const auto kind = image == "sl2" ? glk::ImageKind::ContainsSL2 : glk::ImageKind::FullGL2;
      const auto o = glk::nice_density_oracle(p, k, kind);
      emit({{"p", p}, {"k", k}, {"image", image}, {"density", glk::to_string(o.density)},
            {"favorable", o.favorable}, {"total", o.total},
            {"manifest", manifest("nice density", {{"p", p}, {"k", k}, {"image", image}}).to_json()}});
      return 0;
    }

    if (*order) {
      if (zm == !poly_spec.empty()) throw UsageError("give exactly one of --poly or --zeh-marschke");
      if (!glk::is_prime(q)) throw UsageError("q must be prime");
      const auto src = zm ? glk::SplittingFieldSource::zeh_marschke() : glk::SplittingFieldSource(parse_list(poly_spec));
      const glk::u64 ord = glk::frobenius_order(src, q);
      emit({{"q", q}, {"order", ord}, {"discriminant", src.discriminant().str()},
            {"manifest", manifest("frob order", {{"q", q}, {"poly", zm ? "zeh-marschke" : poly_spec}}).to_json()}});
      return 0;
    }

    if (*window) {
      if (!glk::is_prime(p)) throw UsageError("p must be prime");
      if (m < 1) throw UsageError("m must be >= 1");
      const glk::PurityOptions opt{!no_purity};
      auto mf = manifest("purity window", {{"p", p}, {"m", m}, {"k", k}, {"purity", !no_purity}});
      if (!batch_path.empty()) {
        const std::string text = glk::read_file(batch_path);
        mf.add_input(batch_path, text);
        json rows = json::array();
        std::istringstream in(text);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.empty()) continue;
          const auto cells = split(line, ',');
          if (first && !cells.empty() && cells[0].find_first_of("0123456789") == std::string::npos) {
            first = false;
            continue;  // header
          }
          first = false;
          if (cells.size() != 2) throw UsageError("batch rows must be r,t: '" + line + "'");
          const auto rr = parse_int(cells[0]);
          if (rr < 2) throw UsageError("r must be a prime: '" + line + "'");
          json row = choice_json(glk::purity_window(static_cast<glk::u64>(rr), k, p, m, parse_int(cells[1]), opt));
          row["r"] = rr.str();
          row["t"] = parse_int(cells[1]).str();
          rows.push_back(row);
        }
        emit({{"results", rows}, {"manifest", mf.to_json()}});
        return 0;
      }
      if (r == 0 || trace_s.empty()) throw UsageError("--r and --trace are required without --batch");
      mf.params["r"] = r;
      mf.params["trace"] = trace_s;
      json j = choice_json(glk::purity_window(r, k, p, m, parse_int(trace_s), opt));
      j["threshold_approx"] = k >= 1 ? json(glk::feasibility_threshold(p, m, k)) : json(nullptr);
      j["manifest"] = mf.to_json();
      emit(j);
      return 0;
    }

    if (*compat) {
      auto parse_c = [](const std::string& s) {
        const auto v = parse_list(s);
        if (v.size() != 3) throw UsageError("constraint must be prime,m,t: '" + s + "'");
        if (v[0] < 2 || !glk::is_prime(static_cast<glk::u64>(v[0]))) throw UsageError("constraint prime: '" + s + "'");
        if (v[1] < 0) throw UsageError("constraint m must be >= 0: '" + s + "'");
        return glk::TraceConstraint{static_cast<glk::u64>(v[0]), static_cast<int>(v[1]), v[2]};
      };
      const auto a = parse_c(c1), b = parse_c(c2);
      json j = choice_json(glk::compatible_choice(r, k, a, b));
      j["manifest"] = manifest("compatible", {{"r", r}, {"k", k}, {"c1", c1}, {"c2", c2}}).to_json();
      emit(j);
      return 0;
    }

    if (*ledger_cmd) {
      auto mf = manifest("selmer ledger", {{"argv", cmdline}});
      glk::Ledger led;
      json extra;
      if (!chase_spec.empty()) {
        const auto colon = chase_spec.find(':');
        if (colon == std::string::npos) throw UsageError("chase must look like unram:N, L:N,D or M:N,D");
        const std::string kind = chase_spec.substr(0, colon);
        const auto args = parse_list(chase_spec.substr(colon + 1));
        glk::Chase c;
        if (kind == "unram" && args.size() == 1) c = glk::unram_chase(static_cast<int>(args[0]));
        else if (kind == "L" && args.size() == 2) c = glk::polarisation_L_chase(static_cast<int>(args[0]), static_cast<int>(args[1]));
        else if (kind == "M" && args.size() == 2) c = glk::polarisation_M_chase(static_cast<int>(args[0]), static_cast<int>(args[1]));
        else throw UsageError("unknown chase '" + chase_spec + "'");
        led = c.after;
        extra = {{"before", c.before_value()}, {"after", c.after_value()}};
      } else {
        if (ledger_path.empty()) throw UsageError("give a ledger file or --chase");
        const std::string text = glk::read_file(ledger_path);
        mf.add_input(ledger_path, text);
        json j;
        try {
          j = json::parse(text);
        } catch (const json::exception& e) {
          throw UsageError(std::string("ledger is not JSON: ") + e.what());
        }
        led = glk::Ledger::from_json(j);
      }
      json out{{"difference", glk::wiles_difference(led)}, {"balanced", glk::auxiliary_balance(led)},
               {"places", led.places.size()}};
      if (!extra.is_null()) out["chase"] = extra;
      out["manifest"] = mf.to_json();
      emit(out);
      return 0;
    }

    if (*sim) {
      require_p(p);
      if (k < 1) throw UsageError("k must be >= 1");
      if (stages < 1 || stages > 8) throw UsageError("stages must be in [1, 8]");
      glk::SimConfig cfg;
      cfg.p = p;
      cfg.k = k;
      cfg.stages = stages;
      cfg.seed = seed;
      if (!density_s.empty()) cfg.density = parse_rational(density_s);
      auto mf = manifest("lift simulate", {{"p", p}, {"k", k}, {"stages", stages}, {"seed", seed}});
      if (!density_s.empty()) mf.params["density"] = density_s;
      mf.seed = seed;
      auto result = glk::simulate(cfg);
      result.report["manifest"] = mf.to_json();
      emit(result.report, out_path);
      if (!events_path.empty()) {
        std::string lines;
        for (const auto& e : result.events) lines += e.dump() + "\n";
        glk::write_file(events_path, lines);
      }
      return 0;
    }

    if (*sched) {
      const glk::Rational eps = parse_rational(epsilon_s);
      auto mf = manifest("growth schedule", {{"stages", stages}, {"epsilon", epsilon_s}});
      std::optional<glk::NiceCounter> counter;
      if (!curve_spec.empty()) {
        require_p(p);
        const auto a = parse_list(curve_spec);
        if (a.size() != 5) throw UsageError("--curve needs five coefficients a1,a2,a3,a4,a6");
        const glk::RepSource src = glk::EllipticCurveSource(static_cast<glk::i64>(a[0]), static_cast<glk::i64>(a[1]),
                                                            static_cast<glk::i64>(a[2]), static_cast<glk::i64>(a[3]),
                                                            static_cast<glk::i64>(a[4]));
        const auto res = glk::scan_nice(src, p, 1, 1, limit);
        std::vector<glk::u64> nice_primes;
        for (const auto& rec : res.records)
          if (rec.nice) nice_primes.push_back(rec.q);
        counter = glk::NiceCounter::empirical(std::move(nice_primes), limit);
        mf.params["curve"] = curve_spec;
        mf.params["p"] = p;
        mf.params["limit"] = limit;
      } else {
        if (density_s.empty()) throw UsageError("give --density or --curve");
        counter = glk::NiceCounter::synthetic(parse_rational(density_s));
        mf.params["density"] = density_s;
      }
      const auto schedule = glk::growth_schedule(*counter, stages);
      json j = glk::growth_to_json(schedule, glk::growth_violation_check(schedule, eps));
      j["manifest"] = mf.to_json();
      emit(j);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const glk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto c = e.code();
    return (c == glk::ErrorCode::InvalidArgument || c == glk::ErrorCode::InvalidLedger) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
