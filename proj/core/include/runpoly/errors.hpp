#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "runpoly/bigint.hpp"

namespace runpoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed parameters outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exhaustive work refused because it exceeds the configured limits.
class GuardViolation : public Error {
 public:
  using Error::Error;
};

// (x+1)^j does not divide a polynomial. `stage` is the 1-based power at
// which the synthetic division left `remainder` != 0.
class NotDivisible : public Error {
 public:
  NotDivisible(std::size_t stage, BigInt remainder)
      : Error("not divisible by (x+1)^" + std::to_string(stage) +
              ": remainder " + remainder.str()),
        stage_(stage),
        remainder_(std::move(remainder)) {}

  std::size_t stage() const noexcept { return stage_; }
  const BigInt& remainder() const noexcept { return remainder_; }

 private:
  std::size_t stage_;
  BigInt remainder_;
};

class NoIntersection : public Error {
 public:
  using Error::Error;
};

}  // namespace runpoly
