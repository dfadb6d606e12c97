#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runpoly/limits.hpp"

namespace runpoly {

// A permutation of {1..n} in one-line notation. Positions are 1-based in
// every accessor that takes or returns a position.
class Permutation {
 public:
  // Throws InvalidArgument unless `entries` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  // Digits or whitespace/comma separated values: "243165", "10 2 1 ...".
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);
  static Permutation reversal(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int at(int position) const { return entries_.at(position - 1); }
  std::span<const int> entries() const noexcept { return entries_; }

  // Concatenated digits when n <= 9, space separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}
  friend class PermutationStream;
  friend Permutation standardize(std::span<const int> values);

  std::vector<int> entries_;
};

struct RunStatistics {
  int runs = 0;
  std::vector<int> descent_positions;  // i with p_i > p_{i+1}
  std::vector<int> ascent_positions;   // i with p_i < p_{i+1}
};

// Raw-sequence kernels. They accept any sequence of distinct integers and
// are what the enumeration loops call; the Permutation overloads forward.
namespace seq {
int run_count(std::span<const int> values);
int descent_count(std::span<const int> values);
bool is_j_half_ascending(std::span<const int> values, int j);
bool is_fully_half_ascending(std::span<const int> values);
int t_statistic(std::span<const int> values, int j);
}  // namespace seq

// m = floor((n-2)/2), the largest admissible j; 0 for n < 2.
int max_half_ascending_index(int n);

// 1 + number of interior direction changes; 0 for a singleton.
int run_count(const Permutation& p);
int descent_count(const Permutation& p);
std::vector<int> descent_positions(const Permutation& p);
RunStatistics run_statistics(const Permutation& p);

Permutation complement(const Permutation& p);

// Rank-relabels distinct values to a permutation of {1..size}.
Permutation standardize(std::span<const int> values);

// p_{n+1-2i} < p_{n+2-2i} for 1 <= i <= j. Requires 0 <= j <= m.
bool is_j_half_ascending(const Permutation& p, int j);

// Every one of the floor(n/2) right-aligned pairs (n-1,n), (n-3,n-2), ...
// is an ascent. For even n this is p_1<p_2, p_3<p_4, ...; for odd n it is
// p_2<p_3, p_4<p_5, ... . One pair more than j = m.
bool is_fully_half_ascending(const Permutation& p);

// Runs of p_1..p_{n-2j} plus descents of p_{n-2j}..p_n (the boundary entry
// belongs to both). t_0 is run_count. Requires 0 <= j <= m.
int t_statistic(const Permutation& p, int j);

// Swaps the entries at positions n+1-2j and n+2-2j. Requires 1 <= j <= m.
Permutation involution_I(const Permutation& p, int j);

// complement(p) followed by I_1, ..., I_j. An involution on j-half-ascending
// permutations that reverses the relation at every position <= n-2j-1.
Permutation paired_complement(const Permutation& p, int j);

// t_j after moving p to the representative of {p, paired_complement(p, j)}
// in which position n-2j-1 is an ascent. Requires 1 <= j <= m.
int normalized_t_statistic(const Permutation& p, int j);

namespace seq {
int normalized_t_statistic(std::span<const int> values, int j);
}  // namespace seq

using PermutationPredicate = std::function<bool(const Permutation&)>;

// Lexicographic stream of the permutations of {1..n}, optionally filtered.
class PermutationStream {
 public:
  explicit PermutationStream(int n, PermutationPredicate filter = {},
                             const Limits& limits = {});

  std::optional<Permutation> next();

 private:
  std::vector<int> current_;
  PermutationPredicate filter_;
  bool exhausted_ = false;
};

std::vector<Permutation> enumerate_permutations(int n,
                                                PermutationPredicate filter = {},
                                                const Limits& limits = {});

// Visits every permutation of {1..n} whose first entry is `first` (or all
// permutations when first == 0) in lexicographic order, passing the raw
// one-line sequence. Caller is responsible for the guard.
void for_each_sequence(int n, int first,
                       const std::function<void(std::span<const int>)>& visit);

}  // namespace runpoly
