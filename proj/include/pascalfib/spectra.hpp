#pragma once

/**
 * @file spectra.hpp
 * @brief Exact test of the golden-ratio eigenvalue pattern of R_n.
 *
 * The conjectured eigenvalues come in conjugate pairs s*phi^m, s*phibar^m
 * with s = +-1. Since phi + phibar = 1 and phi*phibar = -1, each pair is
 * the root set of the integer quadratic x^2 - s L_m x + (-1)^m, with L_m
 * the m-th Lucas number. So the conjectured characteristic polynomial is
 *
 *   n = 2k:    prod_{i=1..k} (x^2 - (-1)^{k+i} L_{2i-1} x - 1)
 *   n = 2k+1:  (x - (-1)^k) prod_{i=1..k} (x^2 - (-1)^{k+i} L_{2i} x + 1)
 *
 * and comparing it with charpoly(R_n) is an exact integer test.
 */

#include "pascalfib/core.hpp"
#include "pascalfib/fib.hpp"
#include "pascalfib/pascal.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace pascalfib {

/// Quadratic whose roots are s*phi^m and s*phibar^m.
inline IntPolynomial golden_pair_quadratic(int sign, std::uint64_t m) {
  return IntPolynomial{BigInt(sign_pow(static_cast<std::int64_t>(m))), BigInt(-sign * lucas(m)), BigInt(1)};
}

inline IntPolynomial conjectured_charpoly(std::size_t n) {
  if (n < 1) throw std::invalid_argument("conjectured_charpoly: n must be positive");
  const auto k = static_cast<std::int64_t>(n / 2);
  const bool even = n % 2 == 0;
  IntPolynomial result = even ? IntPolynomial{1} : IntPolynomial::linear(sign_pow(k));
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto m = static_cast<std::uint64_t>(even ? 2 * i - 1 : 2 * i);
    result = result * golden_pair_quadratic(sign_pow(k + i), m);
  }
  return result;
}

enum class Parity { even, odd };

constexpr std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct ConjectureReport {
  std::size_t n = 0;
  Parity parity = Parity::even;
  IntPolynomial computed_charpoly;
  IntPolynomial conjectured_charpoly;
  std::optional<std::size_t> first_mismatch_degree;

  bool passed() const { return !first_mismatch_degree.has_value(); }
};

inline ConjectureReport check_eigen_conjecture(std::size_t n) {
  ConjectureReport r{n, n % 2 == 0 ? Parity::even : Parity::odd, charpoly(build_right(n)),
                     conjectured_charpoly(n), std::nullopt};
  for (std::size_t d = 0; d <= n; ++d) {
    if (r.computed_charpoly.coeff(d) != r.conjectured_charpoly.coeff(d)) {
      r.first_mismatch_degree = d;
      break;
    }
  }
  return r;
}

}  // namespace pascalfib
