#pragma once

/**
 * @file pascal.hpp
 * @brief Left-justified (L_n) and column-justified (R_n) Pascal matrices.
 *
 *   L_n(i,j) = C(i-1, j-1)      lower unitriangular
 *   R_n(i,j) = C(i-1, n-j)      L_n with its columns reversed
 *
 * Binomial queries outside the triangle return 0, so boundary terms such
 * as a_{i,n+1} vanish without special cases.
 */

#include "pascalfib/bigint.hpp"
#include "pascalfib/core.hpp"

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace pascalfib {

/// Pascal's triangle grown row by row on demand. Growth takes an exclusive
/// lock; lookups of existing rows take a shared one.
class BinomialCache {
 public:
  BigInt get(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) return 0;
    const auto row = static_cast<std::size_t>(a);
    {
      std::shared_lock lock(mutex_);
      if (row < rows_.size()) return rows_[row][static_cast<std::size_t>(b)];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= row) {
      if (rows_.empty()) {
        rows_.push_back({BigInt(1)});
        continue;
      }
      const auto& prev = rows_.back();
      std::vector<BigInt> next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t k = 1; k < prev.size(); ++k) next[k] = prev[k - 1] + prev[k];
      rows_.push_back(std::move(next));
    }
    return rows_[row][static_cast<std::size_t>(b)];
  }

  std::size_t rows_cached() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

inline BinomialCache& shared_binomials() {
  static BinomialCache cache;
  return cache;
}

/// C(a, b); zero when b lies outside [0, a].
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binomial: a must be non-negative");
  return shared_binomials().get(a, b);
}

inline ExactMatrix build_left(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) m(i, j) = binomial(std::int64_t(i) - 1, std::int64_t(j) - 1);
  return m;
}

inline ExactMatrix build_right(std::size_t n) {
  ExactMatrix m(n);
  const auto sn = static_cast<std::int64_t>(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) m(i, j) = binomial(std::int64_t(i) - 1, sn - std::int64_t(j));
#ifndef NDEBUG
  const ExactMatrix left = build_left(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) assert(m(i, j) == left(i, n + 1 - j));
#endif
  return m;
}

/// Entry (i,j) of L^e in closed form: e^(i-j) C(i-1, j-1), with 0^0 = 1.
/// Valid for every integer e; negative e gives entries of L^{-|e|}, which
/// stay integral because only non-negative powers i-j >= 0 occur.
inline BigInt left_power_entry(std::int64_t e, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1) throw std::invalid_argument("left_power_entry: indices are 1-based");
  if (j > i) return 0;
  return ipow(BigInt(e), static_cast<std::int64_t>(i - j)) *
         binomial(std::int64_t(i) - 1, std::int64_t(j) - 1);
}

/// L_n^{-1}(i,j) = (-1)^(i+j) C(i-1, j-1)
inline ExactMatrix left_inverse(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      m(i, j) = sign_pow(std::int64_t(i + j)) * binomial(std::int64_t(i) - 1, std::int64_t(j) - 1);
  return m;
}

/// R_n^{-1}(i,j) = (-1)^(n+i+j+1) C(n-i, j-1)
inline ExactMatrix right_inverse(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      m(i, j) = sign_pow(std::int64_t(n + i + j + 1)) * binomial(std::int64_t(n - i), std::int64_t(j) - 1);
  return m;
}

}  // namespace pascalfib
