#pragma once

#include <cstdint>
#include <string>

namespace runpoly {

// Ceilings on exhaustive work. Every operation that walks all n!
// permutations, all paths of length n, or all pairs of paths checks
// against one of these and throws GuardViolation when exceeded.
struct Limits {
  int max_enumeration_n = 12;  // permutation and path streams
  int max_table_n = 10;        // full distribution tables
  std::uint64_t max_pairs = 10'000'000;  // per (n, k) cell in phi audits

  // Lifts both n ceilings to at least `n`.
  static Limits with_max_n(int n) {
    Limits limits;
    if (n > limits.max_enumeration_n) limits.max_enumeration_n = n;
    if (n > limits.max_table_n) limits.max_table_n = n;
    return limits;
  }
};

void require_enumeration_n(int n, const Limits& limits);
void require_table_n(int n, const Limits& limits);

}  // namespace runpoly
