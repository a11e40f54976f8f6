#pragma once

/**
 * @file fib.hpp
 * @brief Fibonacci and Lucas numbers, entry points, Pisano periods.
 *
 * F_0 = 0, F_1 = 1; L_0 = 2, L_1 = 1. The entry point (rank of apparition)
 * of m is the least k > 0 with m | F_k; the Pisano period is the least
 * k > 0 with (F_k, F_{k+1}) = (0, 1) mod m. Both are found by forward
 * iteration, capped at 6m.
 */

#include "pascalfib/bigint.hpp"
#include "pascalfib/core.hpp"
#include "pascalfib/pascal.hpp"
#include "pascalfib/verdict.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pascalfib {

namespace detail {

// (F_k, F_{k+1}) by fast doubling:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
inline std::pair<BigInt, BigInt> fib_pair(std::uint64_t k) {
  BigInt a = 0, b = 1;
  for (int bit = 63; bit >= 0; --bit) {
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if ((k >> bit) & 1) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

}  // namespace detail

inline BigInt fib(std::uint64_t k) { return detail::fib_pair(k).first; }

/// Lucas numbers via L_k = F_{k-1} + F_{k+1} = 2 F_{k+1} - F_k.
inline BigInt lucas(std::uint64_t k) {
  auto [f, g] = detail::fib_pair(k);
  return 2 * g - f;
}

/// F_k for k in [-1, ...]; F_{-1} = 1 keeps F_{e-1} defined at e = 0.
inline BigInt fib_signed(std::int64_t k) {
  if (k >= 0) return fib(static_cast<std::uint64_t>(k));
  return sign_pow(-k + 1) * fib(static_cast<std::uint64_t>(-k));
}

/// (F_k mod m, F_{k+1} mod m) in O(log k) steps.
inline std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(std::uint64_t k, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("fib_pair_mod: modulus must be at least 2");
  using detail::mulmod;
  std::uint64_t a = 0, b = 1;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t twice_b = (2 * static_cast<unsigned __int128>(b)) % m;
    const std::uint64_t c = mulmod(a, (twice_b + m - a) % m, m);
    const std::uint64_t d = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(mulmod(a, a, m)) + mulmod(b, b, m)) % m);
    if ((k >> bit) & 1) {
      a = d;
      b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) + d) % m);
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

/// Per-modulus Fibonacci data.
struct FibModData {
  std::uint64_t m = 0;
  std::uint64_t entry_point = 0;
  std::uint64_t pisano_period = 0;
};

namespace detail {

inline FibModData compute_fib_mod_data(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  FibModData data{m, 0, 0};
  const std::uint64_t cap = 6 * m;
  std::uint64_t a = 0, b = 1 % m;  // (F_k, F_{k+1})
  for (std::uint64_t k = 1; k <= cap; ++k) {
    const std::uint64_t next = (a + b) % m;
    a = b;
    b = next;
    if (a == 0 && data.entry_point == 0) data.entry_point = k;
    if (a == 0 && b == 1) {
      data.pisano_period = k;
      return data;
    }
  }
  throw std::logic_error("Fibonacci period of " + std::to_string(m) + " exceeds 6m");
}

}  // namespace detail

/// Insert-only memo of FibModData keyed by modulus, safe for concurrent use.
class FibModCache {
 public:
  FibModData get(std::uint64_t m) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(m); it != table_.end()) return it->second;
    }
    FibModData data = detail::compute_fib_mod_data(m);
    std::lock_guard lock(mutex_);
    return table_.try_emplace(m, data).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::uint64_t, FibModData> table_;
};

inline FibModData fib_mod_data(std::uint64_t m) {
  static FibModCache cache;
  return cache.get(m);
}

inline std::uint64_t entry_point(std::uint64_t m) { return fib_mod_data(m).entry_point; }
inline std::uint64_t pisano_period(std::uint64_t m) { return fib_mod_data(m).pisano_period; }

/// Residue class of a prime with respect to 5: {+-1} or {+-2} (= {+-3}).
enum class Mod5Class { plus_minus_one, plus_minus_two, five };

inline Mod5Class mod5_class(std::uint64_t p) {
  switch (p % 5) {
    case 0: return Mod5Class::five;
    case 1:
    case 4: return Mod5Class::plus_minus_one;
    default: return Mod5Class::plus_minus_two;
  }
}

struct BloomWallReport {
  std::uint64_t p = 0;
  Mod5Class residue_class = Mod5Class::plus_minus_one;
  std::uint64_t entry_point = 0;
  std::uint64_t pisano_period = 0;
  /// For p = +-1 mod 5: P(p) | p-1. For p = +-2 mod 5: e | p+1 and P(p) | 2(p+1).
  bool period_divides = false;
  bool entry_point_divides = true;
  bool passed() const { return period_divides && entry_point_divides; }
};

inline void require_odd_prime_not_five(std::uint64_t p, const char* who) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not prime");
  if (p == 2 || p == 5) throw std::invalid_argument(std::string(who) + ": p must not be 2 or 5");
}

inline BloomWallReport bloom_wall_check(std::uint64_t p) {
  require_odd_prime_not_five(p, "bloom_wall_check");
  const FibModData d = fib_mod_data(p);
  BloomWallReport r{p, mod5_class(p), d.entry_point, d.pisano_period};
  if (r.residue_class == Mod5Class::plus_minus_one) {
    r.period_divides = (p - 1) % d.pisano_period == 0;
  } else {
    r.entry_point_divides = (p + 1) % d.entry_point == 0;
    r.period_divides = (2 * (p + 1)) % d.pisano_period == 0;
  }
  return r;
}

/// F_j from the binomial sum 2^{j-1} F_j = C(j,1) + 5 C(j,3) + 5^2 C(j,5) + ...
inline BigInt fib_via_binomials(std::uint64_t j) {
  if (j < 1) throw std::invalid_argument("fib_via_binomials: j must be positive");
  BigInt sum = 0;
  BigInt five_pow = 1;
  for (std::uint64_t odd = 1; odd <= j; odd += 2) {
    sum += five_pow * binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(odd));
    five_pow *= 5;
  }
  const BigInt scale = BigInt(1) << static_cast<unsigned>(j - 1);
  BigInt q, r;
  boost::multiprecision::divide_qr(sum, scale, q, r);
  if (r != 0) throw std::logic_error("fib_via_binomials: inexact division");
  return q;
}

struct IdentityReport {
  std::uint64_t e = 0;
  bool cassini = false;      // F_{e-1} F_{e+1} - F_e^2 = (-1)^e
  bool doubling = false;     // F_{2e-1} = F_{e-1}^2 + F_e^2
  bool passed() const { return cassini && doubling; }
};

inline IdentityReport check_identities(std::uint64_t e) {
  if (e < 1) throw std::invalid_argument("check_identities: e must be positive");
  const BigInt fm1 = fib(e - 1), f0 = fib(e), fp1 = fib(e + 1);
  IdentityReport r{e};
  r.cassini = fm1 * fp1 - f0 * f0 == sign_pow(static_cast<std::int64_t>(e));
  r.doubling = fib(2 * e - 1) == fm1 * fm1 + f0 * f0;
  return r;
}

struct PeriodExactnessReport {
  std::uint64_t p = 0;
  std::uint64_t entry_point = 0;
  std::uint64_t pisano_period = 0;
  Verdict verdict = Verdict::hypothesis_not_met;
  std::string branch;  // "p-1", "2(p+1)" or empty when the hypothesis fails
};

/// If p = +-1 mod 5 and e(p) = p-1, the period is exactly p-1.
/// If p = +-2 mod 5 and e(p) = p+1, the period is exactly 2(p+1).
inline PeriodExactnessReport period_exactness_check(std::uint64_t p) {
  require_odd_prime_not_five(p, "period_exactness_check");
  const FibModData d = fib_mod_data(p);
  PeriodExactnessReport r{p, d.entry_point, d.pisano_period, Verdict::hypothesis_not_met, {}};
  const Mod5Class cls = mod5_class(p);
  if (cls == Mod5Class::plus_minus_one && d.entry_point == p - 1) {
    r.branch = "p-1";
    r.verdict = verdict_of(d.pisano_period == p - 1);
  } else if (cls == Mod5Class::plus_minus_two && d.entry_point == p + 1) {
    r.branch = "2(p+1)";
    r.verdict = verdict_of(d.pisano_period == 2 * (p + 1));
  }
  return r;
}

}  // namespace pascalfib
