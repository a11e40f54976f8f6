#pragma once

/**
 * @file core.hpp
 * @brief Exact dense linear algebra over the integers and over prime fields.
 *
 * ExactMatrix holds arbitrary-precision entries; ModMatrix holds residues
 * modulo a machine-word prime. Public indexing is 1-based, (row, column),
 * so that formulas written for a_{i,j} translate directly.
 *
 * Algorithms:
 *   - determinant: Bareiss fraction-free elimination with row pivoting
 *   - characteristic polynomial: Faddeev-LeVerrier (every division is exact)
 *   - unimodular inverse: adjugate from the Faddeev-LeVerrier sequence
 */

#include "pascalfib/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pascalfib {

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// IntPolynomial
// ---------------------------------------------------------------------------

/// Dense integer polynomial, coefficients in ascending degree order.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPolynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }

  /// x - root
  static IntPolynomial linear(const BigInt& root) { return IntPolynomial{-root, 1}; }

  /// Degree, or -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^k; zero beyond the degree.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, highest degree first, e.g. "x^3 - 2x^2 - 2x + 1".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
      const BigInt& c = coeffs_[idx];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || idx == 0) os << mag;
      if (idx >= 1) os << "x";
      if (idx >= 2) os << "^" << idx;
      first = false;
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// ExactMatrix
// ---------------------------------------------------------------------------

/// Dense square matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  /// Zero matrix of dimension n (n >= 1).
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw std::invalid_argument("ExactMatrix: dimension must be at least 1");
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
  }

  static ExactMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("ExactMatrix: rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.data_[i * m.n_ + j] = rows[i][j];
    }
    return m;
  }

  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<BigInt>> rows) {
    std::vector<std::vector<BigInt>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  std::size_t n() const { return n_; }

  /// 1-based access, unchecked.
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * n_ + (j - 1)]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[(i - 1) * n_ + (j - 1)]; }

  /// 1-based access, bounds-checked.
  const BigInt& at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("ExactMatrix::at: index out of range");
    return (*this)(i, j);
  }

  BigInt trace() const {
    BigInt t = 0;
    for (std::size_t i = 1; i <= n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_identity() const { return *this == identity(n_); }

  std::vector<std::vector<BigInt>> rows() const {
    std::vector<std::vector<BigInt>> out(n_, std::vector<BigInt>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = data_[i * n_ + j];
    return out;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << "[";
  for (std::size_t i = 1; i <= m.n(); ++i) {
    os << (i > 1 ? ",[" : "[");
    for (std::size_t j = 1; j <= m.n(); ++j) os << (j > 1 ? "," : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t n = a.n();
  ExactMatrix c(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t s = 1; s <= n; ++s) {
      const BigInt& ais = a(i, s);
      if (ais == 0) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        if (b(s, j) != 0) c(i, j) += ais * b(s, j);
      }
    }
  }
  return c;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

inline ExactMatrix scale(const ExactMatrix& a, const BigInt& k) {
  ExactMatrix out = a;
  for (std::size_t i = 1; i <= a.n(); ++i)
    for (std::size_t j = 1; j <= a.n(); ++j) out(i, j) *= k;
  return out;
}

/// Exact determinant by Bareiss fraction-free elimination.
inline BigInt det(const ExactMatrix& a) {
  const std::size_t n = a.n();
  std::vector<std::vector<BigInt>> m = a.rows();
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace detail {

struct FaddeevLeVerrier {
  IntPolynomial charpoly;
  ExactMatrix last_m;  // M_n; adj(A) = (-1)^(n+1) M_n
};

// M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
inline FaddeevLeVerrier faddeev_leverrier(const ExactMatrix& a) {
  const std::size_t n = a.n();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  ExactMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = mat_mul(a, m);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) += c[n - k + 1];
    BigInt tr = mat_mul(a, m).trace();
    BigInt q, r;
    boost::multiprecision::divide_qr(tr, BigInt(k), q, r);
    if (r != 0) throw std::logic_error("faddeev_leverrier: inexact division");
    c[n - k] = -q;
  }
  return {IntPolynomial(std::move(c)), std::move(m)};
}

}  // namespace detail

/// Monic characteristic polynomial det(xI - A).
inline IntPolynomial charpoly(const ExactMatrix& a) { return detail::faddeev_leverrier(a).charpoly; }

/// Evaluates p at the matrix A (Horner), e.g. for Cayley-Hamilton checks.
inline ExactMatrix evaluate_at(const IntPolynomial& p, const ExactMatrix& a) {
  ExactMatrix acc(a.n());
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = mat_mul(acc, a);
    for (std::size_t i = 1; i <= a.n(); ++i) acc(i, i) += *it;
  }
  return acc;
}

/// Exact inverse of a matrix with determinant +-1.
inline ExactMatrix unimodular_inverse(const ExactMatrix& a) {
  const BigInt d = det(a);
  if (d != 1 && d != -1) throw std::domain_error("unimodular_inverse: not unimodular over the integers");
  auto fl = detail::faddeev_leverrier(a);
  const BigInt c0 = fl.charpoly.coeff(0);
  if (c0 != sign_pow(static_cast<std::int64_t>(a.n())) * d)
    throw std::logic_error("unimodular_inverse: determinant routes disagree");
  // A^{-1} = -M_n / c_0 and c_0 = +-1.
  return scale(fl.last_m, -c0);
}

/// A^e by binary powering; negative e requires a unimodular A.
inline ExactMatrix mat_pow(const ExactMatrix& a, std::int64_t e) {
  if (e < 0) return mat_pow(unimodular_inverse(a), -e);
  ExactMatrix result = ExactMatrix::identity(a.n());
  ExactMatrix base = a;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// ModMatrix
// ---------------------------------------------------------------------------

/// Dense square matrix of residues modulo a prime p.
class ModMatrix {
 public:
  /// Zero matrix; throws if p is not prime.
  ModMatrix(std::size_t n, std::uint64_t p) : ModMatrix(n, p, Unchecked{}) {
    if (n == 0) throw std::invalid_argument("ModMatrix: dimension must be at least 1");
    if (!is_prime(p)) throw std::invalid_argument("ModMatrix: modulus " + std::to_string(p) + " is not prime");
  }

  static ModMatrix identity(std::size_t n, std::uint64_t p) {
    ModMatrix m(n, p);
    for (std::size_t i = 1; i <= n; ++i) m.data_[(i - 1) * n + (i - 1)] = 1 % p;
    return m;
  }

  static ModMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
    ModMatrix m(rows.size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("ModMatrix: rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.set(i + 1, j + 1, rows[i][j]);
    }
    return m;
  }

  std::size_t n() const { return n_; }
  std::uint64_t modulus() const { return p_; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[(i - 1) * n_ + (j - 1)]; }

  /// Stores v reduced mod p.
  void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[(i - 1) * n_ + (j - 1)] = v % p_; }

  bool is_identity() const { return scalar_value() == std::optional<std::uint64_t>(1 % p_); }

  /// The scalar s when the matrix equals s*I, otherwise nullopt.
  std::optional<std::uint64_t> scalar_value() const {
    const std::uint64_t s = data_[0];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (data_[i * n_ + j] != (i == j ? s : 0)) return std::nullopt;
    return s;
  }

  std::vector<std::vector<std::uint64_t>> rows() const {
    std::vector<std::vector<std::uint64_t>> out(n_, std::vector<std::uint64_t>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = data_[i * n_ + j];
    return out;
  }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  struct Unchecked {};
  ModMatrix(std::size_t n, std::uint64_t p, Unchecked) : n_(n), p_(p), data_(n * n) {}

  friend ModMatrix modmat_mul(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix mat_mod(const ExactMatrix& a, std::uint64_t p);

  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

inline std::ostream& operator<<(std::ostream& os, const ModMatrix& m) {
  os << "[";
  for (std::size_t i = 1; i <= m.n(); ++i) {
    os << (i > 1 ? ",[" : "[");
    for (std::size_t j = 1; j <= m.n(); ++j) os << (j > 1 ? "," : "") << m(i, j);
    os << "]";
  }
  return os << "] mod " << m.modulus();
}

/// Entrywise canonical reduction into [0, p).
inline ModMatrix mat_mod(const ExactMatrix& a, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("mat_mod: modulus " + std::to_string(p) + " is not prime");
  ModMatrix m(a.n(), p, ModMatrix::Unchecked{});
  for (std::size_t i = 1; i <= a.n(); ++i)
    for (std::size_t j = 1; j <= a.n(); ++j) m.data_[(i - 1) * a.n() + (j - 1)] = mod_reduce(a(i, j), p);
  return m;
}

inline ModMatrix modmat_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("modmat_mul: dimension mismatch");
  if (a.p_ != b.p_) throw std::invalid_argument("modmat_mul: modulus mismatch");
  const std::size_t n = a.n_;
  const std::uint64_t p = a.p_;
  ModMatrix c(n, p, ModMatrix::Unchecked{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t s = 0; s < n; ++s) {
        acc += static_cast<unsigned __int128>(a.data_[i * n + s]) * b.data_[s * n + j];
        // Each term is below 2^64 when p < 2^32; wider moduli fold every step.
        if (p > (std::uint64_t{1} << 32)) acc %= p;
      }
      c.data_[i * n + j] = static_cast<std::uint64_t>(acc % p);
    }
  }
  return c;
}

inline ModMatrix modmat_pow(const ModMatrix& a, std::uint64_t e) {
  ModMatrix result = ModMatrix::identity(a.n(), a.modulus());
  ModMatrix base = a;
  while (e > 0) {
    if (e & 1) result = modmat_mul(result, base);
    e >>= 1;
    if (e > 0) base = modmat_mul(base, base);
  }
  return result;
}

/// Determinant over GF(p) by Gaussian elimination.
inline std::uint64_t det_mod(const ModMatrix& a) {
  const std::size_t n = a.n();
  const std::uint64_t p = a.modulus();
  auto m = a.rows();
  std::uint64_t d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m[r][k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      std::swap(m[r], m[k]);
      d = (p - d) % p;
    }
    d = detail::mulmod(d, m[k][k], p);
    const std::uint64_t inv = detail::powmod(m[k][k], p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t f = detail::mulmod(m[i][k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) m[i][j] = (m[i][j] + p - detail::mulmod(f, m[k][j], p)) % p;
    }
  }
  return d;
}

}  // namespace pascalfib
