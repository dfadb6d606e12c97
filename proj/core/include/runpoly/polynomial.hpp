#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "runpoly/bigint.hpp"

namespace runpoly {

// Dense polynomial with arbitrary-precision integer coefficients. Index 0
// is the constant term; trailing zeros are always stripped, so the zero
// polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(std::size_t power, BigInt coefficient = 1);
  // (x+1)^power.
  static IntPolynomial x_plus_1_power(std::size_t power);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  // Zero outside the stored range.
  BigInt coefficient(std::size_t power) const;

  // Smallest power with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> lowest_power() const;

  // Multiplies by x^power.
  IntPolynomial shifted_up(std::size_t power) const;
  // Divides by x^power; throws InvalidArgument if a dropped coefficient is nonzero.
  IntPolynomial shifted_down(std::size_t power) const;

  IntPolynomial scaled(const BigInt& factor) const;

  // "2x + 12x^2 + 10x^3"; "0" for zero.
  std::string str() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coefficients_;
};

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);

BigInt evaluate(const IntPolynomial& poly, const BigInt& x);

// q with q * (x+1)^j == poly, by j rounds of synthetic division at -1.
// Throws NotDivisible carrying the first nonzero remainder and its round.
IntPolynomial divide_exact_x_plus_1(const IntPolynomial& poly, std::size_t j);

struct LogConcavityReport {
  bool log_concave = true;
  std::optional<long> first_violation;  // index k with c_{k-1} c_{k+1} > c_k^2
  explicit operator bool() const noexcept { return log_concave; }
};

struct UnimodalityReport {
  bool unimodal = true;
  std::optional<long> peak;  // index of the first maximum; empty for an empty sequence
  explicit operator bool() const noexcept { return unimodal; }
};

// Indices reported are `first_index` + offset into `coefficients`, so a
// sequence of R(n,k) for k = 1..n-1 is checked with first_index = 1.
// No positivity is assumed; values outside the sequence count as 0.
LogConcavityReport is_log_concave(std::span<const BigInt> coefficients, long first_index = 0);
LogConcavityReport is_log_concave(const IntPolynomial& poly);

// Weakly increasing, then weakly decreasing.
UnimodalityReport is_unimodal(std::span<const BigInt> coefficients, long first_index = 0);
UnimodalityReport is_unimodal(const IntPolynomial& poly);

// Nonzero coefficients occupy one interval of powers (no internal zeros).
bool has_contiguous_support(const IntPolynomial& poly);
bool has_nonnegative_coefficients(const IntPolynomial& poly);

}  // namespace runpoly
