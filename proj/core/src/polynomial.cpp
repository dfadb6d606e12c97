#include "runpoly/polynomial.hpp"

#include <algorithm>

#include "runpoly/errors.hpp"

namespace runpoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long long c : coefficients) coefficients_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, BigInt coefficient) {
  std::vector<BigInt> c(power + 1);
  c[power] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::x_plus_1_power(std::size_t power) {
  std::vector<BigInt> row{1};
  for (std::size_t r = 0; r < power; ++r) {
    std::vector<BigInt> next(row.size() + 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  return IntPolynomial(std::move(row));
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : BigInt(0);
}

std::optional<std::size_t> IntPolynomial::lowest_power() const {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] != 0) return i;
  }
  return std::nullopt;
}

IntPolynomial IntPolynomial::shifted_up(std::size_t power) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(power, BigInt(0));
  c.insert(c.end(), coefficients_.begin(), coefficients_.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted_down(std::size_t power) const {
  for (std::size_t i = 0; i < std::min(power, coefficients_.size()); ++i) {
    if (coefficients_[i] != 0) {
      throw InvalidArgument("x^" + std::to_string(power) + " does not divide " + str());
    }
  }
  if (power >= coefficients_.size()) return {};
  return IntPolynomial(std::vector<BigInt>(coefficients_.begin() + power, coefficients_.end()));
}

IntPolynomial IntPolynomial::scaled(const BigInt& factor) const {
  std::vector<BigInt> c = coefficients_;
  for (auto& v : c) v *= factor;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) out += magnitude.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<BigInt> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return multiply(a, b); }

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

BigInt evaluate(const IntPolynomial& poly, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = poly.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial divide_exact_x_plus_1(const IntPolynomial& poly, std::size_t j) {
  if (j == 0) throw InvalidArgument("divide_exact_x_plus_1 needs j >= 1");
  std::vector<BigInt> current = poly.coefficients();
  for (std::size_t stage = 1; stage <= j; ++stage) {
    if (current.empty()) return {};
    // Horner at -1 from the top: q_{d-1} = c_d, q_{i-1} = c_i - q_i.
    const std::size_t d = current.size() - 1;
    std::vector<BigInt> quotient(d);
    BigInt carry = 0;
    for (std::size_t i = d; i >= 1; --i) {
      carry = current[i] - carry;
      quotient[i - 1] = carry;
    }
    BigInt remainder = current[0] - carry;
    if (remainder != 0) throw NotDivisible(stage, std::move(remainder));
    current = IntPolynomial(std::move(quotient)).coefficients();
  }
  return IntPolynomial(std::move(current));
}

LogConcavityReport is_log_concave(std::span<const BigInt> coefficients, long first_index) {
  LogConcavityReport report;
  for (std::size_t k = 1; k + 1 < coefficients.size(); ++k) {
    if (coefficients[k - 1] * coefficients[k + 1] > coefficients[k] * coefficients[k]) {
      report.log_concave = false;
      report.first_violation = first_index + static_cast<long>(k);
      break;
    }
  }
  return report;
}

LogConcavityReport is_log_concave(const IntPolynomial& poly) {
  return is_log_concave(poly.coefficients(), 0);
}

UnimodalityReport is_unimodal(std::span<const BigInt> coefficients, long first_index) {
  UnimodalityReport report;
  if (coefficients.empty()) return report;
  std::size_t i = 0;
  while (i + 1 < coefficients.size() && coefficients[i] <= coefficients[i + 1]) ++i;
  // Walk back over a plateau so the witness is the first maximum.
  std::size_t peak = i;
  while (peak > 0 && coefficients[peak - 1] == coefficients[peak]) --peak;
  report.peak = first_index + static_cast<long>(peak);
  for (; i + 1 < coefficients.size(); ++i) {
    if (coefficients[i] < coefficients[i + 1]) {
      report.unimodal = false;
      break;
    }
  }
  return report;
}

UnimodalityReport is_unimodal(const IntPolynomial& poly) {
  return is_unimodal(poly.coefficients(), 0);
}

bool has_contiguous_support(const IntPolynomial& poly) {
  const auto low = poly.lowest_power();
  if (!low) return true;
  const auto& c = poly.coefficients();
  return std::all_of(c.begin() + static_cast<long>(*low), c.end(),
                     [](const BigInt& v) { return v != 0; });
}

bool has_nonnegative_coefficients(const IntPolynomial& poly) {
  const auto& c = poly.coefficients();
  return std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v >= 0; });
}

}  // namespace runpoly
