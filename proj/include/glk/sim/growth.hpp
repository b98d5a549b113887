#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glk/core/integer.hpp"

namespace glk {

/// A monotone counting function for nice primes: either the synthetic
/// D * x / log x, or the step function of an explicit sorted prime list.
///
/// The synthetic form is used without a floor; see the README for why.
class NiceCounter {
 public:
  static NiceCounter synthetic(Rational density) {
    require(density > 0 && density <= 1, ErrorCode::InvalidArgument, "density must lie in (0, 1]");
    NiceCounter c;
    c.density_ = std::move(density);
    return c;
  }

  static NiceCounter empirical(std::vector<u64> nice_primes, u64 scan_bound) {
    NiceCounter c;
    std::sort(nice_primes.begin(), nice_primes.end());
    c.primes_ = std::move(nice_primes);
    c.bound_ = scan_bound;
    return c;
  }

  bool is_synthetic() const { return density_.has_value(); }
  const std::optional<Rational>& density() const { return density_; }
  u64 scan_bound() const { return bound_; }

  /// log N(x); -inf when N(x) = 0.
  long double log_count(long double log_x) const {
    if (density_) {
      return std::log(static_cast<long double>(to_double_ld(*density_))) + log_x - std::log(log_x);
    }
    const u64 x = static_cast<u64>(std::floor(std::exp(log_x) + 0.5L));
    const auto n = count_at(x);
    return n == 0 ? -std::numeric_limits<long double>::infinity() : std::log(static_cast<long double>(n));
  }

  u64 count_at(u64 x) const {
    return static_cast<u64>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
  }

 private:
  static long double to_double_ld(const Rational& r) {
    return static_cast<long double>(boost::multiprecision::numerator(r).convert_to<long double>() /
                                    boost::multiprecision::denominator(r).convert_to<long double>());
  }

  std::optional<Rational> density_;
  std::vector<u64> primes_;
  u64 bound_ = 0;
};

struct GrowthStage {
  int n;
  Rational exponent;            // 1 + 1/2^{n-1}
  std::optional<u64> f;         // exact when it fits in 64 bits
  long double log_f;
  int m;
  long double log_required;     // log(f / log(f)^exponent)
  long double log_achieved;     // log N(f)
  std::optional<u64> achieved_count;  // empirical counters only
};

struct GrowthOptions {
  int m_start = 2;
  int m_step = 1;
};

inline Rational stage_exponent(int n) {
  require(n >= 1, ErrorCode::InvalidArgument, "stages start at 1");
  return 1 + Rational(1, ipow(BigInt(2), static_cast<unsigned>(n - 1)));
}

namespace detail {

inline long double to_ld(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<long double>() /
         boost::multiprecision::denominator(r).convert_to<long double>();
}

inline bool stage_holds(const NiceCounter& N, u64 x, long double e) {
  if (x < 3) return false;
  const long double lx = std::log(static_cast<long double>(x));
  if (N.is_synthetic()) {
    // D x / log x >= x / log(x)^e  <=>  D log(x)^{e-1} >= 1
    return to_ld(*N.density()) * std::pow(lx, e - 1) >= 1.0L;
  }
  return static_cast<long double>(N.count_at(x)) >= static_cast<long double>(x) / std::pow(lx, e);
}

}  // namespace detail

/// Smallest f_n > f_{n-1} with N(f_n) >= f_n / log(f_n)^{1 + 1/2^{n-1}}.
///
/// Synthetic counters are inverted in closed form: the condition is
/// log f >= D^{-1/(e-1)} = D^{-2^{n-1}}. Stages whose f overflows 64 bits keep
/// only log f. Empirical counters are scanned up to their bound.
inline std::vector<GrowthStage> growth_schedule(const NiceCounter& N, int stages, GrowthOptions opt = {}) {
  require(stages >= 1, ErrorCode::InvalidArgument, "need at least one stage");
  require(opt.m_step >= 1, ErrorCode::InvalidArgument, "m must strictly increase");
  std::vector<GrowthStage> out;
  u64 prev = 0;
  long double prev_log = 0;
  bool prev_exact = true;
  for (int n = 1; n <= stages; ++n) {
    GrowthStage st;
    st.n = n;
    st.exponent = stage_exponent(n);
    st.m = opt.m_start + (n - 1) * opt.m_step;
    const long double e = detail::to_ld(st.exponent);

    if (N.is_synthetic()) {
      const Rational inv = 1 / *N.density();
      const long double lb = std::pow(detail::to_ld(inv), std::ldexp(1.0L, n - 1));
      require(std::isfinite(lb), ErrorCode::Unsatisfiable, "log f overflows at stage " + std::to_string(n));
      if (prev_exact && lb < 43.0L) {
        u64 f = static_cast<u64>(std::ceil(std::exp(lb)));
        while (f > 3 && detail::stage_holds(N, f - 1, e)) --f;  // guard against rounding in exp
        while (!detail::stage_holds(N, f, e)) ++f;
        f = std::max(f, prev + 1);
        st.f = f;
        st.log_f = std::log(static_cast<long double>(f));
      } else {
        st.log_f = std::max(lb, prev_log);
        if (!prev_exact && st.log_f <= prev_log) st.log_f = std::nextafter(prev_log, std::numeric_limits<long double>::infinity());
      }
    } else {
      const u64 bound = N.scan_bound();
      u64 f = prev + 1;
      while (f <= bound && !detail::stage_holds(N, f, e)) ++f;
      require(f <= bound, ErrorCode::Unsatisfiable,
              "no f <= " + std::to_string(bound) + " satisfies stage " + std::to_string(n));
      st.f = f;
      st.log_f = std::log(static_cast<long double>(f));
      st.achieved_count = N.count_at(f);
    }
    st.log_required = st.log_f - e * std::log(st.log_f);
    st.log_achieved = N.log_count(st.log_f);
    if (st.achieved_count) st.log_achieved = std::log(static_cast<long double>(*st.achieved_count));
    prev_exact = st.f.has_value();
    prev = st.f.value_or(prev);
    prev_log = st.log_f;
    out.push_back(std::move(st));
  }
  return out;
}

struct ViolationRow {
  int n;
  long double log_rho;  // log(R(f_n) log(f_n)^{1+eps} / f_n)
  bool checked;         // exponent < 1 + eps
};

struct ViolationReport {
  Rational epsilon;
  std::vector<ViolationRow> rows;
  int first_checked = 0;  // 0 when none
  std::string status;     // "violation", "no_violation", "inconclusive"
};

/// With every scheduled nice prime ramified, R(f_n) = N(f_n). The ratio must
/// grow once the stage exponent drops below 1 + eps.
inline ViolationReport growth_violation_check(const std::vector<GrowthStage>& schedule, const Rational& epsilon) {
  require(epsilon > 0, ErrorCode::InvalidArgument, "epsilon must be positive");
  require(!schedule.empty(), ErrorCode::InvalidArgument, "empty schedule");
  ViolationReport rep;
  rep.epsilon = epsilon;
  const long double eps = detail::to_ld(epsilon);
  std::vector<long double> checked;
  for (const auto& st : schedule) {
    ViolationRow row{st.n, st.log_achieved + (1 + eps) * std::log(st.log_f) - st.log_f, st.exponent < 1 + epsilon};
    if (row.checked) {
      if (rep.first_checked == 0) rep.first_checked = st.n;
      checked.push_back(row.log_rho);
    }
    rep.rows.push_back(row);
  }
  if (checked.size() < 2) {
    rep.status = "inconclusive";
  } else {
    bool increasing = true;
    for (std::size_t i = 1; i < checked.size(); ++i) increasing = increasing && checked[i] > checked[i - 1];
    rep.status = increasing ? "violation" : "no_violation";
  }
  return rep;
}

inline nlohmann::json growth_to_json(const std::vector<GrowthStage>& schedule, const ViolationReport& rep) {
  nlohmann::json stages = nlohmann::json::array();
  nlohmann::json exps = nlohmann::json::array();
  for (const auto& st : schedule) {
    nlohmann::json j{{"n", st.n}, {"m", st.m}, {"exponent", to_string(st.exponent)},
                     {"log_f_approx", static_cast<double>(st.log_f)},
                     {"log_required_approx", static_cast<double>(st.log_required)},
                     {"log_achieved_approx", static_cast<double>(st.log_achieved)},
                     {"satisfied", st.log_achieved >= st.log_required - 1e-12L * std::fabs(st.log_required)}};
    j["f"] = st.f ? nlohmann::json(*st.f) : nlohmann::json(nullptr);
    if (st.achieved_count) j["achieved_count"] = *st.achieved_count;
    stages.push_back(j);
    exps.push_back(to_string(st.exponent));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"n", r.n}, {"log_rho_approx", static_cast<double>(r.log_rho)}, {"checked", r.checked}});
  return {{"stages", stages},
          {"exponents", exps},
          {"violation", {{"epsilon", to_string(rep.epsilon)}, {"first_checked_stage", rep.first_checked},
                         {"status", rep.status}, {"table", rows}}}};
}

}  // namespace glk
