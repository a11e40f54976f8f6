#pragma once

/**
 * @file laws.hpp
 * @brief Cell-by-cell verifiers for the recurrences satisfied by powers of R_n.
 *
 * Every verifier rebuilds its power of R_n through mat_pow and compares
 * both sides of a law exactly over the integers. Index ranges are the ones
 * declared for each law; checked_cells always equals the size of that range.
 *
 * Law ids:
 *   square-recurrence  b_{i,j+1} = b_{i-1,j+1} + 2 b_{i-1,j} - b_{i,j}       2<=i<=n, 1<=j<=n-1
 *   cube-recurrence    c_{i+1,j} = 2 c_{i,j} + 3 c_{i,j-1} - 2 c_{i+1,j-1}   1<=i<=n-1, 2<=j<=n
 *   fib-recurrence     F_{e-1} a_{i,j} = F_e a_{i-1,j} + F_{e+1} a_{i-1,j-1} - F_e a_{i,j-1}
 *                                                                            2<=i,j<=n
 *   border             a_{1,j} = C(n-1,j-1) F_{e-1}^{n-j} F_e^{j-1},  a_{i,1} = F_{e-1}^{n-i} F_e^{i-1}
 *   row-expansion      rows of R^2 and R^3 from the previous row             1<=i<=n-1, 1<=j<=n
 *   row-propagation    denominator-cleared row expansion of R^e, e >= 2      1<=i<=n-1, 1<=j<=n
 */

#include "pascalfib/bigint.hpp"
#include "pascalfib/core.hpp"
#include "pascalfib/fib.hpp"
#include "pascalfib/pascal.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pascalfib {

struct CellWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  BigInt lhs;
  BigInt rhs;
};

struct CellLawReport {
  std::size_t n = 0;
  std::int64_t e = 0;
  std::string law_id;
  std::size_t checked_cells = 0;
  std::vector<CellWitness> failures;

  bool passed() const { return failures.empty(); }
};

/// Inclusive index box over which a law is checked.
struct CellRange {
  std::size_t i_first, i_last, j_first, j_last;

  std::size_t size() const {
    if (i_last < i_first || j_last < j_first) return 0;
    return (i_last - i_first + 1) * (j_last - j_first + 1);
  }
};

using CellLaw = std::function<std::pair<BigInt, BigInt>(std::size_t i, std::size_t j)>;

/// Evaluates lhs/rhs of a law over every cell of range.
inline CellLawReport check_cells(std::string law_id, std::size_t n, std::int64_t e, CellRange range,
                                 const CellLaw& law) {
  CellLawReport report{n, e, std::move(law_id), 0, {}};
  for (std::size_t i = range.i_first; i <= range.i_last; ++i) {
    for (std::size_t j = range.j_first; j <= range.j_last; ++j) {
      auto [lhs, rhs] = law(i, j);
      ++report.checked_cells;
      if (lhs != rhs) report.failures.push_back({i, j, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

inline ExactMatrix right_power(std::size_t n, std::int64_t e) { return mat_pow(build_right(n), e); }

inline CellLawReport verify_square_recurrence(std::size_t n) {
  if (n < 2) throw std::invalid_argument("verify_square_recurrence: n must be at least 2");
  const ExactMatrix b = right_power(n, 2);
  return check_cells("square-recurrence", n, 2, {2, n, 1, n - 1}, [&](std::size_t i, std::size_t j) {
    return std::pair{b(i, j + 1), BigInt(b(i - 1, j + 1) + 2 * b(i - 1, j) - b(i, j))};
  });
}

inline CellLawReport verify_cube_recurrence(std::size_t n) {
  if (n < 2) throw std::invalid_argument("verify_cube_recurrence: n must be at least 2");
  const ExactMatrix c = right_power(n, 3);
  return check_cells("cube-recurrence", n, 3, {1, n - 1, 2, n}, [&](std::size_t i, std::size_t j) {
    return std::pair{c(i + 1, j), BigInt(2 * c(i, j) + 3 * c(i, j - 1) - 2 * c(i + 1, j - 1))};
  });
}

/// Coefficients of delta a_{i,j} = alpha a_{i-1,j} + beta a_{i-1,j-1} + gamma a_{i,j-1}.
struct FourTermCoefficients {
  BigInt delta, alpha, beta, gamma;
  friend bool operator==(const FourTermCoefficients&, const FourTermCoefficients&) = default;
};

/// (F_{e-1}, F_e, F_{e+1}, -F_e)
inline FourTermCoefficients fibonacci_coefficients(std::int64_t e) {
  return {fib_signed(e - 1), fib_signed(e), fib_signed(e + 1), -fib_signed(e)};
}

/// Iterates the coefficient system
///   delta_e = alpha_{e-1}, alpha_e = alpha_{e-1} + delta_{e-1},
///   beta_e = beta_{e-1} - gamma_{e-1}, gamma_e = -beta_{e-1}
/// from (0, 1, 1, -1) at e = 1.
inline FourTermCoefficients coefficient_system(std::int64_t e) {
  if (e < 1) throw std::invalid_argument("coefficient_system: e must be positive");
  FourTermCoefficients c{0, 1, 1, -1};
  for (std::int64_t k = 2; k <= e; ++k) {
    c = {c.alpha, c.alpha + c.delta, c.beta - c.gamma, -c.beta};
  }
  return c;
}

/// Checks a four-term relation on a over 2 <= i, j <= n.
inline CellLawReport verify_four_term_relation(const ExactMatrix& a, std::int64_t e,
                                               const FourTermCoefficients& k,
                                               std::string law_id = "four-term") {
  const std::size_t n = a.n();
  return check_cells(std::move(law_id), n, e, {2, n, 2, n}, [&](std::size_t i, std::size_t j) {
    return std::pair{BigInt(k.delta * a(i, j)),
                     BigInt(k.alpha * a(i - 1, j) + k.beta * a(i - 1, j - 1) + k.gamma * a(i, j - 1))};
  });
}

inline CellLawReport verify_fib_recurrence(std::size_t n, std::int64_t e) {
  if (n < 2) throw std::invalid_argument("verify_fib_recurrence: n must be at least 2");
  if (e < 1) throw std::invalid_argument("verify_fib_recurrence: e must be positive");
  return verify_four_term_relation(right_power(n, e), e, fibonacci_coefficients(e), "fib-recurrence");
}

/// Closed forms of the first row and first column of R_n^e (0^0 = 1).
inline BigInt border_first_row(std::size_t n, std::int64_t e, std::size_t j) {
  return binomial(std::int64_t(n) - 1, std::int64_t(j) - 1) * ipow(fib_signed(e - 1), std::int64_t(n - j)) *
         ipow(fib_signed(e), std::int64_t(j) - 1);
}

inline BigInt border_first_column(std::size_t n, std::int64_t e, std::size_t i) {
  return ipow(fib_signed(e - 1), std::int64_t(n - i)) * ipow(fib_signed(e), std::int64_t(i) - 1);
}

/// Checks the first row and first column; checked_cells = 2n.
inline CellLawReport verify_border_formulas(std::size_t n, std::int64_t e) {
  if (n < 1) throw std::invalid_argument("verify_border_formulas: n must be positive");
  if (e < 1) throw std::invalid_argument("verify_border_formulas: e must be positive");
  const ExactMatrix a = right_power(n, e);
  CellLawReport row = check_cells("border", n, e, {1, 1, 1, n}, [&](std::size_t i, std::size_t j) {
    return std::pair{a(i, j), border_first_row(n, e, j)};
  });
  CellLawReport col = check_cells("border", n, e, {1, n, 1, 1}, [&](std::size_t i, std::size_t j) {
    return std::pair{a(i, j), border_first_column(n, e, i)};
  });
  row.checked_cells += col.checked_cells;
  for (auto& w : col.failures) row.failures.push_back(std::move(w));
  return row;
}

/// Both row expansions:
///   b_{i+1,j} = b_{i,j} - sum_{k=1}^{j-1} (-1)^k b_{i,j-k}
///   c_{i+1,j} = 2 c_{i,j} + sum_{k=1}^{j-1} (-1)^k 2^{k-1} c_{i,j-k}
/// over 1 <= i <= n-1, 1 <= j <= n. checked_cells counts both powers.
inline CellLawReport verify_row_expansion_23(std::size_t n) {
  if (n < 2) throw std::invalid_argument("verify_row_expansion_23: n must be at least 2");
  const ExactMatrix b = right_power(n, 2);
  const ExactMatrix c = right_power(n, 3);
  const CellRange range{1, n - 1, 1, n};
  CellLawReport sq = check_cells("row-expansion", n, 2, range, [&](std::size_t i, std::size_t j) {
    BigInt rhs = b(i, j);
    for (std::size_t k = 1; k < j; ++k) rhs -= sign_pow(std::int64_t(k)) * b(i, j - k);
    return std::pair{b(i + 1, j), rhs};
  });
  CellLawReport cu = check_cells("row-expansion", n, 3, range, [&](std::size_t i, std::size_t j) {
    BigInt rhs = 2 * c(i, j);
    for (std::size_t k = 1; k < j; ++k) rhs += sign_pow(std::int64_t(k)) * ipow(2, std::int64_t(k) - 1) * c(i, j - k);
    return std::pair{c(i + 1, j), rhs};
  });
  sq.checked_cells += cu.checked_cells;
  for (auto& w : cu.failures) sq.failures.push_back(std::move(w));
  return sq;
}

/// Row propagation for R^e with denominators cleared:
///   F_{e-1}^j a_{i+1,j} = F_e F_{e-1}^{j-1} a_{i,j}
///                         - sum_{k=1}^{j-1} (-1)^{k+e} F_e^{k-1} F_{e-1}^{j-1-k} a_{i,j-k}
/// over 1 <= i <= n-1, 1 <= j <= n. Requires e >= 2 (F_0 = 0).
inline CellLawReport verify_row_propagation(std::size_t n, std::int64_t e) {
  if (n < 2) throw std::invalid_argument("verify_row_propagation: n must be at least 2");
  if (e < 2) throw std::invalid_argument("verify_row_propagation: e must be at least 2");
  const ExactMatrix a = right_power(n, e);
  const BigInt prev = fib_signed(e - 1);
  const BigInt cur = fib_signed(e);
  return check_cells("row-propagation", n, e, {1, n - 1, 1, n}, [&](std::size_t i, std::size_t j) {
    const auto sj = static_cast<std::int64_t>(j);
    BigInt rhs = cur * ipow(prev, sj - 1) * a(i, j);
    for (std::int64_t k = 1; k < sj; ++k)
      rhs -= sign_pow(k + e) * ipow(cur, k - 1) * ipow(prev, sj - 1 - k) * a(i, j - std::size_t(k));
    return std::pair{BigInt(ipow(prev, sj) * a(i + 1, j)), rhs};
  });
}

}  // namespace pascalfib
