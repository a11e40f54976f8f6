#pragma once

/**
 * @file campaign.hpp
 * @brief Verification campaigns over (law, n, e, p) grids.
 *
 * A campaign expands a CampaignConfig into an ordered task list, runs the
 * tasks (optionally on several threads) and collects one CheckResult per
 * task in the same order, so output never depends on scheduling.
 */

#include "pascalfib/core.hpp"
#include "pascalfib/fib.hpp"
#include "pascalfib/laws.hpp"
#include "pascalfib/modorder.hpp"
#include "pascalfib/pascal.hpp"
#include "pascalfib/spectra.hpp"
#include "pascalfib/verdict.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace pascalfib {

/// Rejected campaign configuration; maps to the usage-error exit code.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which grid axes a law iterates over.
enum class Axes { n, n_e, n_p, p, e };

struct LawInfo {
  std::string_view id;
  Axes axes;
};

inline constexpr std::array<LawInfo, 19> kLaws{{
    {"mod2", Axes::n},
    {"left-closed-form", Axes::n_e},
    {"square-recurrence", Axes::n},
    {"cube-recurrence", Axes::n},
    {"fib-recurrence", Axes::n_e},
    {"border", Axes::n_e},
    {"row-expansion", Axes::n},
    {"row-propagation", Axes::n_e},
    {"inverses", Axes::n},
    {"left-order", Axes::n_p},
    {"scalar-power", Axes::n_p},
    {"pminus1", Axes::n_p},
    {"pplus1", Axes::n_p},
    {"order-bound", Axes::n_p},
    {"order-bound-tight", Axes::n_p},
    {"eigen-conjecture", Axes::n},
    {"bloom-wall", Axes::p},
    {"period-exactness", Axes::p},
    {"identities", Axes::e},
}};

inline const LawInfo* find_law(std::string_view id) {
  for (const auto& law : kLaws)
    if (law.id == id) return &law;
  return nullptr;
}

struct IntRange {
  std::int64_t first = 0;
  std::int64_t last = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class OutputFormat { json, csv, plain };

struct CampaignConfig {
  std::vector<std::string> laws;
  IntRange n_range{2, 8};
  IntRange e_range{1, 12};
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  OutputFormat output_format = OutputFormat::plain;
  bool fail_fast = false;
  unsigned threads = 1;
};

inline constexpr std::int64_t kMaxDimension = 64;
inline constexpr std::int64_t kMaxExponent = 64;
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ConfigError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

/// Parses "a..b" or a single integer "a" (meaning a..a).
inline IntRange parse_range(std::string_view text, std::string_view what = "range") {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = detail::parse_int(text, what);
    return {v, v};
  }
  return {detail::parse_int(text.substr(0, dots), what), detail::parse_int(text.substr(dots + 2), what)};
}

inline std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline void validate_config(const CampaignConfig& c) {
  if (c.laws.empty()) throw ConfigError("no laws requested");
  for (const auto& id : c.laws)
    if (!find_law(id)) throw ConfigError("unknown law id '" + id + "'");
  if (c.n_range.first > c.n_range.last) throw ConfigError("empty n range");
  if (c.n_range.first < 1 || c.n_range.last > kMaxDimension) throw ConfigError("n range must lie within 1..64");
  if (c.e_range.first > c.e_range.last) throw ConfigError("empty e range");
  if (c.e_range.first < -kMaxExponent || c.e_range.last > kMaxExponent)
    throw ConfigError("e range must lie within -64..64");
  if (c.primes.empty()) throw ConfigError("empty prime list");
  for (auto p : c.primes) {
    if (p > kMaxPrime) throw ConfigError("prime " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
  }
  if (c.threads == 0) throw ConfigError("threads must be at least 1");
}

struct CheckParams {
  std::optional<std::int64_t> n, e;
  std::optional<std::uint64_t> p;
};

struct CheckResult {
  std::string law;
  CheckParams params;
  Verdict verdict = Verdict::fail;
  std::optional<std::string> witness;
};

struct CampaignReport {
  std::string campaign;
  std::vector<CheckResult> checks;
  bool complete = true;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [v](const CheckResult& c) { return c.verdict == v; }));
  }
  bool passed() const { return count(Verdict::fail) == 0; }
};

namespace detail {

inline std::string describe(const CellLawReport& r) {
  std::ostringstream os;
  os << r.failures.size() << " of " << r.checked_cells << " cells fail; first at (" << r.failures.front().i << ","
     << r.failures.front().j << "): lhs=" << r.failures.front().lhs << " rhs=" << r.failures.front().rhs;
  return os.str();
}

inline CheckResult from_cells(std::string law, CheckParams params, const CellLawReport& r) {
  CheckResult out{std::move(law), params, verdict_of(r.passed()), std::nullopt};
  if (!r.passed()) out.witness = describe(r);
  return out;
}

inline CheckResult from_order(std::string law, CheckParams params, const OrderReport& r,
                              std::initializer_list<std::string_view> ids) {
  CheckResult out{std::move(law), params, Verdict::pass, std::nullopt};
  bool all_not_met = true;
  std::ostringstream witness;
  for (auto id : ids) {
    const auto& check = r.theorem_checks.at(std::string(id));
    if (check.verdict != Verdict::hypothesis_not_met) all_not_met = false;
    if (check.verdict == Verdict::fail) {
      out.verdict = Verdict::fail;
      witness << id << " failed:";
      for (const auto& [k, v] : check.values) witness << " " << k << "=" << v;
      witness << "; ";
    }
  }
  if (out.verdict == Verdict::pass && all_not_met) out.verdict = Verdict::hypothesis_not_met;
  if (out.verdict == Verdict::fail) out.witness = witness.str();
  return out;
}

inline CheckResult run_check(std::string_view law, const CheckParams& prm) {
  const std::string id(law);
  const auto n = static_cast<std::size_t>(prm.n.value_or(0));
  const std::int64_t e = prm.e.value_or(0);
  const std::uint64_t p = prm.p.value_or(0);

  if (law == "mod2") {
    const bool left = mat_mod(mat_pow(build_left(n), 2), 2).is_identity();
    const bool right = mat_mod(mat_pow(build_right(n), 3), 2).is_identity();
    CheckResult out{id, prm, verdict_of(left && right), std::nullopt};
    if (!left) out.witness = "L_n^2 is not I mod 2";
    if (!right) out.witness = out.witness.value_or("") + (left ? "" : "; ") + "R_n^3 is not I mod 2";
    return out;
  }
  if (law == "left-closed-form") {
    const ExactMatrix power = mat_pow(build_left(n), e);
    return from_cells(id, prm, check_cells(id, n, e, {1, n, 1, n}, [&](std::size_t i, std::size_t j) {
                        return std::pair{power(i, j), left_power_entry(e, i, j)};
                      }));
  }
  if (law == "square-recurrence") return from_cells(id, prm, verify_square_recurrence(n));
  if (law == "cube-recurrence") return from_cells(id, prm, verify_cube_recurrence(n));
  if (law == "fib-recurrence") return from_cells(id, prm, verify_fib_recurrence(n, e));
  if (law == "border") return from_cells(id, prm, verify_border_formulas(n, e));
  if (law == "row-expansion") return from_cells(id, prm, verify_row_expansion_23(n));
  if (law == "row-propagation") return from_cells(id, prm, verify_row_propagation(n, e));
  if (law == "inverses") {
    const ExactMatrix id_n = ExactMatrix::identity(n);
    const ExactMatrix l = build_left(n), r = build_right(n);
    const ExactMatrix li = left_inverse(n), ri = right_inverse(n);
    const bool ok_l = mat_mul(l, li) == id_n && mat_mul(li, l) == id_n;
    const bool ok_r = mat_mul(r, ri) == id_n && mat_mul(ri, r) == id_n;
    CheckResult out{id, prm, verdict_of(ok_l && ok_r), std::nullopt};
    if (!ok_l || !ok_r) out.witness = std::string(ok_l ? "" : "left ") + (ok_r ? "" : "right ") + "inverse not two-sided";
    return out;
  }
  if (law == "left-order") return from_order(id, prm, verify_left_order(n, p), {"left-order", "left-closed-form"});
  if (law == "scalar-power")
    return from_order(id, prm, verify_scalar_power(n, p), {"scalar-form", "scalar-sign", "four-e-annihilates"});
  if (law == "pminus1") return from_order(id, prm, verify_pminus1(n, p), {"pminus1"});
  if (law == "pplus1") return from_order(id, prm, verify_pplus1(n, p), {"pplus1"});
  if (law == "order-bound") return from_order(id, prm, verify_order_bound(n, p), {"order-divides-4e", "order-bound"});
  if (law == "order-bound-tight") return from_order(id, prm, verify_order_bound(n, p), {"order-bound-tight"});
  if (law == "eigen-conjecture") {
    const ConjectureReport r = check_eigen_conjecture(n);
    CheckResult out{id, prm, verdict_of(r.passed()), std::nullopt};
    if (!r.passed())
      out.witness = "computed " + r.computed_charpoly.str() + " vs conjectured " + r.conjectured_charpoly.str() +
                    "; first mismatch at degree " + std::to_string(*r.first_mismatch_degree);
    return out;
  }
  if (law == "bloom-wall") {
    const BloomWallReport r = bloom_wall_check(p);
    CheckResult out{id, prm, verdict_of(r.passed()), std::nullopt};
    if (!r.passed())
      out.witness = "entry point " + std::to_string(r.entry_point) + ", period " + std::to_string(r.pisano_period);
    return out;
  }
  if (law == "period-exactness") {
    const PeriodExactnessReport r = period_exactness_check(p);
    CheckResult out{id, prm, r.verdict, std::nullopt};
    if (r.verdict == Verdict::fail)
      out.witness = "branch " + r.branch + ": period " + std::to_string(r.pisano_period);
    return out;
  }
  if (law == "identities") {
    const auto ue = static_cast<std::uint64_t>(e);
    const IdentityReport r = check_identities(ue);
    const bool binomial_ok = fib_via_binomials(ue) == fib(ue);
    CheckResult out{id, prm, verdict_of(r.passed() && binomial_ok), std::nullopt};
    if (out.verdict == Verdict::fail)
      out.witness = std::string(r.cassini ? "" : "cassini ") + (r.doubling ? "" : "doubling ") +
                    (binomial_ok ? "" : "binomial-sum");
    return out;
  }
  throw ConfigError("unknown law id '" + id + "'");
}

}  // namespace detail

/// Expands the config into tasks ordered by (law, n, e, p). Grid points
/// outside a law's domain (e.g. e < 2 for row-propagation, p in {2, 5} for
/// bloom-wall) are skipped.
inline std::vector<std::pair<std::string, CheckParams>> expand_tasks(const CampaignConfig& c) {
  std::vector<std::pair<std::string, CheckParams>> tasks;
  for (const auto& id : c.laws) {
    const LawInfo* law = find_law(id);
    if (!law) throw ConfigError("unknown law id '" + id + "'");
    std::vector<std::uint64_t> primes = c.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    auto n_ok = [&](std::int64_t n) {
      if (id == "mod2" || id == "left-order" || id.find("recurrence") != std::string::npos || id == "row-expansion" ||
          id == "row-propagation")
        return n >= 2;
      return n >= 1;
    };
    auto e_ok = [&](std::int64_t e) {
      if (id == "left-closed-form") return true;
      if (id == "row-propagation") return e >= 2;
      return e >= 1;
    };
    auto p_ok = [&](std::uint64_t p) {
      if (id == "bloom-wall" || id == "period-exactness") return p != 2 && p != 5;
      return true;
    };

    switch (law->axes) {
      case Axes::n:
        for (auto n = c.n_range.first; n <= c.n_range.last; ++n)
          if (n_ok(n)) tasks.push_back({id, {n, std::nullopt, std::nullopt}});
        break;
      case Axes::n_e:
        for (auto n = c.n_range.first; n <= c.n_range.last; ++n)
          for (auto e = c.e_range.first; e <= c.e_range.last; ++e)
            if (n_ok(n) && e_ok(e)) tasks.push_back({id, {n, e, std::nullopt}});
        break;
      case Axes::n_p:
        for (auto n = c.n_range.first; n <= c.n_range.last; ++n)
          for (auto p : primes)
            if (n_ok(n)) tasks.push_back({id, {n, std::nullopt, p}});
        break;
      case Axes::p:
        for (auto p : primes)
          if (p_ok(p)) tasks.push_back({id, {std::nullopt, std::nullopt, p}});
        break;
      case Axes::e:
        for (auto e = c.e_range.first; e <= c.e_range.last; ++e)
          if (e >= 1) tasks.push_back({id, {std::nullopt, e, std::nullopt}});
        break;
    }
  }
  return tasks;
}

inline CampaignReport run_campaign(const CampaignConfig& config) {
  validate_config(config);
  const auto tasks = expand_tasks(config);

  CampaignReport report;
  for (const auto& id : config.laws) report.campaign += (report.campaign.empty() ? "" : ",") + id;

  std::vector<std::optional<CheckResult>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      if (config.fail_fast && idx > first_failure.load()) return;
      CheckResult r = detail::run_check(tasks[idx].first, tasks[idx].second);
      if (config.fail_fast && r.verdict == Verdict::fail) {
        std::size_t cur = first_failure.load();
        while (idx < cur && !first_failure.compare_exchange_weak(cur, idx)) {
        }
      }
      results[idx] = std::move(r);
    }
  };

  const unsigned threads = std::min<std::size_t>(config.threads, std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  const std::size_t cut = std::min(first_failure.load(), tasks.size() - (tasks.empty() ? 0 : 1));
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (config.fail_fast && i > cut) {
      report.complete = false;
      break;
    }
    report.checks.push_back(std::move(*results[i]));
  }
  return report;
}

}  // namespace pascalfib
