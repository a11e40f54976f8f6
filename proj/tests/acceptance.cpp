// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
// Closed forms enter through a Forms table so that criterion 13 can swap a
// single corrupted formula in and confirm that some other criterion notices.

#include "pascalfib/campaign.hpp"
#include "pascalfib/core.hpp"
#include "pascalfib/fib.hpp"
#include "pascalfib/laws.hpp"
#include "pascalfib/modorder.hpp"
#include "pascalfib/pascal.hpp"
#include "pascalfib/spectra.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace pascalfib;

namespace {

// Grid sizes for each criterion.
constexpr std::size_t kMod2MaxN = 64;
constexpr std::size_t kLeftFormMaxN = 12;
constexpr std::int64_t kLeftFormMinE = -3, kLeftFormMaxE = 10;
constexpr std::size_t kRecurrenceMaxN = 10;
constexpr std::int64_t kFibRecurrenceMaxE = 12;
constexpr std::size_t kBorderMaxN = 12;
constexpr std::int64_t kBorderMaxE = 12;
constexpr std::uint64_t kBloomWallPrimeLimit = 200;
constexpr std::size_t kOrderMinN = 2, kOrderMaxN = 8;
const std::vector<std::uint64_t> kOrderPrimes{2, 3, 5, 7, 11, 13};
constexpr std::size_t kConditionalMaxN = 8;
const std::vector<std::uint64_t> kPPlusOnePrimes{2, 3, 7, 13};
constexpr std::size_t kInverseMaxN = 32;
constexpr std::size_t kConjectureMaxN = 16;
constexpr std::uint64_t kIdentityMaxE = 500;
constexpr std::uint64_t kBinomialSumMaxJ = 200;

struct Forms {
  std::function<BigInt(std::int64_t, std::size_t, std::size_t)> left_entry = left_power_entry;
  std::function<BigInt(std::size_t, std::int64_t, std::size_t)> border_row = border_first_row;
  std::function<BigInt(std::size_t, std::int64_t, std::size_t)> border_col = border_first_column;
  std::function<ExactMatrix(std::size_t)> left_inv = left_inverse;
  std::function<ExactMatrix(std::size_t)> right_inv = right_inverse;
  std::function<FourTermCoefficients(std::int64_t)> fib_coeffs = fibonacci_coefficients;
  std::function<IntPolynomial(std::size_t)> conjectured = conjectured_charpoly;
  std::function<std::uint64_t(std::size_t, std::uint64_t, std::uint64_t)> entry_scalar =
      detail::predicted_entry_scalar;
  // R_n^{p+1} mod p when p | F_{p+1}: 1 for odd n, p-1 for even n
  std::function<std::uint64_t(std::size_t, std::uint64_t)> pplus1_scalar = [](std::size_t n, std::uint64_t p) {
    return n % 2 == 1 ? 1 % p : p - 1;
  };
  std::function<BigInt(std::int64_t)> cassini_rhs = [](std::int64_t e) { return BigInt(sign_pow(e)); };
};

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string at(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << "=" << v << " ";
  return os.str();
}

Outcome mod2_identities(const Forms&) {
  Outcome o;
  for (std::size_t n = 2; n <= kMod2MaxN && o.ok; ++n) {
    if (!mat_mod(mat_pow(build_left(n), 2), 2).is_identity()) o.fail(at({{"n", n}}) + "L^2 != I mod 2");
    if (!mat_mod(mat_pow(build_right(n), 3), 2).is_identity()) o.fail(at({{"n", n}}) + "R^3 != I mod 2");
  }
  return o;
}

Outcome left_closed_form(const Forms& f) {
  Outcome o;
  for (std::size_t n = 1; n <= kLeftFormMaxN && o.ok; ++n)
    for (std::int64_t e = kLeftFormMinE; e <= kLeftFormMaxE && o.ok; ++e) {
      const ExactMatrix power = mat_pow(build_left(n), e);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          if (power(i, j) != f.left_entry(e, i, j))
            o.fail(at({{"n", n}, {"e", e}, {"i", i}, {"j", j}}) + "entry mismatch");
    }
  return o;
}

Outcome square_cube_recurrences(const Forms&) {
  Outcome o;
  for (std::size_t n = 2; n <= kRecurrenceMaxN && o.ok; ++n) {
    if (!verify_square_recurrence(n).passed()) o.fail(at({{"n", n}}) + "square recurrence");
    if (!verify_cube_recurrence(n).passed()) o.fail(at({{"n", n}}) + "cube recurrence");
  }
  return o;
}

Outcome fib_recurrence(const Forms& f) {
  Outcome o;
  for (std::size_t n = 2; n <= kRecurrenceMaxN && o.ok; ++n)
    for (std::int64_t e = 1; e <= kFibRecurrenceMaxE && o.ok; ++e) {
      const auto r = verify_four_term_relation(right_power(n, e), e, f.fib_coeffs(e));
      if (!r.passed()) o.fail(at({{"n", n}, {"e", e}}) + std::to_string(r.failures.size()) + " failing cells");
    }
  return o;
}

Outcome border_formulas(const Forms& f) {
  Outcome o;
  for (std::size_t n = 1; n <= kBorderMaxN && o.ok; ++n)
    for (std::int64_t e = 1; e <= kBorderMaxE && o.ok; ++e) {
      const ExactMatrix a = right_power(n, e);
      for (std::size_t k = 1; k <= n; ++k) {
        if (a(1, k) != f.border_row(n, e, k)) o.fail(at({{"n", n}, {"e", e}, {"j", k}}) + "first row");
        if (a(k, 1) != f.border_col(n, e, k)) o.fail(at({{"n", n}, {"e", e}, {"i", k}}) + "first column");
      }
    }
  return o;
}

Outcome entry_points_and_periods(const Forms&) {
  Outcome o;
  if (entry_point(2) != 3) o.fail("entry_point(2)");
  if (entry_point(5) != 5) o.fail("entry_point(5)");
  if (pisano_period(5) != 20) o.fail("pisano_period(5)");
  if (entry_point(13) != 7) o.fail("entry_point(13)");
  for (std::uint64_t p = 3; p < kBloomWallPrimeLimit && o.ok; ++p) {
    if (p == 5 || !is_prime(p)) continue;
    if (!bloom_wall_check(p).passed()) o.fail(at({{"p", std::int64_t(p)}}) + "divisibility");
  }
  return o;
}

Outcome order_theorems(const Forms&) {
  Outcome o;
  std::string over_bound;
  for (std::size_t n = kOrderMinN; n <= kOrderMaxN; ++n)
    for (std::uint64_t p : kOrderPrimes) {
      const auto left = verify_left_order(n, p);
      if (left.order != p) o.fail(at({{"n", n}, {"p", std::int64_t(p)}}) + "order(L) != p");
      const ModMatrix r = mat_mod(build_right(n), p);
      if (!modmat_pow(r, 4 * entry_point(p)).is_identity()) o.fail(at({{"n", n}, {"p", std::int64_t(p)}}) + "R^{4e} != I");
      const auto right = verify_order_bound(n, p);
      if (right.order == 0 || right.order > 2 * (p + 1))
        over_bound += " (n=" + std::to_string(n) + ",p=" + std::to_string(p) + "):" + std::to_string(right.order);
    }
  const auto r413 = verify_order_bound(4, 13);
  if (r413.order != 28) o.fail("order(R_4 mod 13) = " + std::to_string(r413.order));
  if (!over_bound.empty()) o.fail("order(R_n mod p) exceeds 2(p+1) at" + over_bound);
  return o;
}

Outcome scalar_congruences(const Forms& f) {
  Outcome o;
  for (std::size_t n = kOrderMinN; n <= kOrderMaxN && o.ok; ++n)
    for (std::uint64_t p : kOrderPrimes) {
      const std::uint64_t e = entry_point(p);
      const auto scalar = modmat_pow(mat_mod(build_right(n), p), e).scalar_value();
      if (!scalar || *scalar != f.entry_scalar(n, e, p))
        o.fail(at({{"n", n}, {"p", std::int64_t(p)}}) + "R^e is not the predicted scalar");
    }
  return o;
}

Outcome conditional_theorems(const Forms& f) {
  Outcome o;
  if (fib(10) % 11 != 0) o.fail("11 does not divide F_10");
  for (std::size_t n = 1; n <= kConditionalMaxN && o.ok; ++n) {
    if (!modmat_pow(mat_mod(build_right(n), 11), 10).is_identity()) o.fail(at({{"n", n}}) + "R^10 != I mod 11");
    for (std::uint64_t p : kPPlusOnePrimes) {
      if (fib(p + 1) % p != 0) o.fail(at({{"p", std::int64_t(p)}}) + "p does not divide F_{p+1}");
      const auto scalar = modmat_pow(mat_mod(build_right(n), p), p + 1).scalar_value();
      if (!scalar || *scalar != f.pplus1_scalar(n, p)) o.fail(at({{"n", n}, {"p", std::int64_t(p)}}) + "R^{p+1}");
    }
  }
  return o;
}

Outcome inverse_closed_forms(const Forms& f) {
  Outcome o;
  for (std::size_t n = 1; n <= kInverseMaxN && o.ok; ++n) {
    const ExactMatrix id = ExactMatrix::identity(n);
    const ExactMatrix l = build_left(n), li = f.left_inv(n);
    const ExactMatrix r = build_right(n), ri = f.right_inv(n);
    if (l * li != id || li * l != id) o.fail(at({{"n", n}}) + "left inverse");
    if (r * ri != id || ri * r != id) o.fail(at({{"n", n}}) + "right inverse");
  }
  return o;
}

Outcome eigen_conjecture(const Forms& f) {
  Outcome o;
  for (std::size_t n = 1; n <= kConjectureMaxN && o.ok; ++n) {
    const IntPolynomial computed = charpoly(build_right(n));
    const IntPolynomial predicted = f.conjectured(n);
    if (computed != predicted) {
      std::ostringstream os;
      os << "n=" << n << " computed " << computed << " conjectured " << predicted << " differing degrees:";
      for (std::size_t d = 0; d <= n; ++d)
        if (computed.coeff(d) != predicted.coeff(d)) os << " " << d;
      o.fail(os.str());
    }
  }
  return o;
}

Outcome identity_suite(const Forms& f) {
  Outcome o;
  for (std::uint64_t e = 1; e <= kIdentityMaxE && o.ok; ++e) {
    const BigInt a = fib(e - 1), b = fib(e), c = fib(e + 1);
    const auto se = static_cast<std::int64_t>(e);
    if (a * c - b * b != f.cassini_rhs(se)) o.fail(at({{"e", se}}) + "Cassini");
    if (fib(2 * e - 1) != a * a + b * b) o.fail(at({{"e", se}}) + "doubling");
    if (!check_identities(e).passed()) o.fail(at({{"e", se}}) + "library identity report");
  }
  for (std::uint64_t j = 1; j <= kBinomialSumMaxJ && o.ok; ++j)
    if (fib_via_binomials(j) != fib(j)) o.fail(at({{"j", std::int64_t(j)}}) + "binomial sum");
  return o;
}

using Criterion = Outcome (*)(const Forms&);

const std::vector<std::pair<const char*, Criterion>> kCriteria{
    {"mod-2 identities", mod2_identities},
    {"left power closed form", left_closed_form},
    {"square/cube recurrences", square_cube_recurrences},
    {"fibonacci-coefficient recurrence", fib_recurrence},
    {"border formulas", border_formulas},
    {"entry points, periods, divisibility", entry_points_and_periods},
    {"order theorems", order_theorems},
    {"scalar congruences at the entry point", scalar_congruences},
    {"conditional p-1 / p+1 theorems", conditional_theorems},
    {"inverse closed forms", inverse_closed_forms},
    {"eigenvalue conjecture", eigen_conjecture},
    {"identity suite", identity_suite},
};

// Index (1-based) of the first criterion in `usable` that rejects the forms, or 0.
std::size_t first_rejecting(const Forms& f, const std::vector<bool>& usable) {
  for (std::size_t k = 0; k < kCriteria.size(); ++k)
    if (usable[k] && !kCriteria[k].second(f).ok) return k + 1;
  return 0;
}

std::vector<std::pair<std::string, Forms>> mutations() {
  std::vector<std::pair<std::string, Forms>> out;
  auto add = [&](std::string name, auto edit) {
    Forms f;
    edit(f);
    out.emplace_back(std::move(name), std::move(f));
  };
  add("left entry base e+1", [](Forms& f) {
    f.left_entry = [](std::int64_t e, std::size_t i, std::size_t j) {
      return j > i ? BigInt(0) : BigInt(ipow(BigInt(e + 1), std::int64_t(i - j)) * binomial(i - 1, j - 1));
    };
  });
  add("first-row exponent n-j+1", [](Forms& f) {
    f.border_row = [](std::size_t n, std::int64_t e, std::size_t j) {
      return BigInt(binomial(std::int64_t(n) - 1, std::int64_t(j) - 1) *
                    ipow(fib_signed(e - 1), std::int64_t(n - j) + 1) * ipow(fib_signed(e), std::int64_t(j) - 1));
    };
  });
  add("first-column drops F_{e-1}", [](Forms& f) {
    f.border_col = [](std::size_t, std::int64_t e, std::size_t i) { return ipow(fib_signed(e), std::int64_t(i) - 1); };
  });
  add("left inverse without sign", [](Forms& f) {
    f.left_inv = [](std::size_t n) {
      ExactMatrix m(n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) m(i, j) = binomial(i - 1, j - 1);
      return m;
    };
  });
  add("right inverse sign flipped", [](Forms& f) { f.right_inv = [](std::size_t n) { return scale(right_inverse(n), -1); }; });
  add("recurrence alpha F_{e+1}", [](Forms& f) {
    f.fib_coeffs = [](std::int64_t e) {
      auto k = fibonacci_coefficients(e);
      k.alpha = fib_signed(e + 1);
      return k;
    };
  });
  add("recurrence gamma +F_e", [](Forms& f) {
    f.fib_coeffs = [](std::int64_t e) {
      auto k = fibonacci_coefficients(e);
      k.gamma = fib_signed(e);
      return k;
    };
  });
  add("Lucas coefficient L_3 + 1", [](Forms& f) {
    f.conjectured = [](std::size_t n) {
      const auto k = static_cast<std::int64_t>(n / 2);
      const bool even = n % 2 == 0;
      IntPolynomial result = even ? IntPolynomial{1} : IntPolynomial::linear(sign_pow(k));
      for (std::int64_t i = 1; i <= k; ++i) {
        const auto m = static_cast<std::uint64_t>(even ? 2 * i - 1 : 2 * i);
        IntPolynomial q = golden_pair_quadratic(sign_pow(k + i), m);
        if (m == 3) q = q - IntPolynomial{0, sign_pow(k + i)};
        result = result * q;
      }
      return result;
    };
  });
  add("scalar sign (-1)^{ke} for even n", [](Forms& f) {
    f.entry_scalar = [](std::size_t n, std::uint64_t e, std::uint64_t p) {
      if (n % 2 == 1) return detail::predicted_entry_scalar(n, e, p);
      const std::uint64_t v = fib_pair_mod(e - 1, p).first;
      return ((n / 2) * e) % 2 == 0 ? v : (p - v) % p;
    };
  });
  add("p+1 sign swapped by parity", [](Forms& f) {
    f.pplus1_scalar = [](std::size_t n, std::uint64_t p) { return n % 2 == 0 ? 1 % p : p - 1; };
  });
  add("Cassini sign flipped", [](Forms& f) { f.cassini_rhs = [](std::int64_t e) { return BigInt(-sign_pow(e)); }; });
  return out;
}

Outcome mutation_audit(const Forms&) {
  Outcome o;
  // every law verifier works on mat_pow output
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::int64_t e = -2; e <= 6; ++e)
      if (right_power(n, e) != mat_pow(build_right(n), e)) o.fail(at({{"n", n}, {"e", e}}) + "right_power");
  // A criterion that already fails on the true forms cannot witness a mutation.
  const Forms truth;
  std::vector<bool> usable;
  for (const auto& c : kCriteria) usable.push_back(c.second(truth).ok);
  for (const auto& [name, forms] : mutations()) {
    const std::size_t k = first_rejecting(forms, usable);
    if (k == 0) o.fail("mutation '" + name + "' survived");
    else std::cout << "    mutation '" << name << "' caught by criterion " << k << "\n";
  }
  return o;
}

}  // namespace

int main() {
  const Forms forms;
  std::size_t failures = 0;
  auto report = [&](std::size_t index, const char* title, Criterion c) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c(forms);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << title << " (" << timing << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failures;
  };
  for (std::size_t k = 0; k < kCriteria.size(); ++k) report(k + 1, kCriteria[k].first, kCriteria[k].second);
  report(13, "mutation audit", mutation_audit);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
