#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer alias and small helpers shared by all modules.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pascalfib {

using BigInt = boost::multiprecision::cpp_int;

/// Integer power with the 0^0 = 1 convention. Negative exponents are only
/// defined for bases of absolute value 1.
inline BigInt ipow(BigInt base, std::int64_t exp) {
  if (exp < 0) {
    if (base == 1) return 1;
    if (base == -1) return (exp % 2 == 0) ? 1 : -1;
    throw std::domain_error("ipow: negative exponent on a non-unit base");
  }
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

/// (-1)^k for any integer k.
constexpr int sign_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Canonical residue of v in [0, m).
inline std::uint64_t mod_reduce(const BigInt& v, std::uint64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

}  // namespace pascalfib
