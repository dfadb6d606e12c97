#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runpoly/bigint.hpp"
#include "runpoly/limits.hpp"
#include "runpoly/permutation.hpp"

namespace runpoly {

// H sorts before V; path streams rely on this ordering.
enum class Direction : std::uint8_t { horizontal = 0, vertical = 1 };

struct Edge {
  Direction dir = Direction::horizontal;
  int label = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Labeled northeastern lattice path stored as its edge sequence. Edge
// indices are 1-based to match the labeling conditions:
//   (1) edge 1 is H with label 1;
//   (2) same-direction neighbours satisfy e_i >= e_{i+1};
//   (3) perpendicular neighbours satisfy e_i + e_{i+1} <= i + 1.
// A LabeledPath may hold an invalid sequence; validate() decides.
class LabeledPath {
 public:
  LabeledPath() = default;
  explicit LabeledPath(std::vector<Edge> edges) : edges_(std::move(edges)) {}

  // "H1 H1 V2 V1 H1 V5" (spaces optional: "H1H1V2").
  static LabeledPath parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(int index) const { return edges_.at(index - 1); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int vertical_count() const noexcept;

  std::string str() const;

  friend auto operator<=>(const LabeledPath&, const LabeledPath&) = default;
  friend bool operator==(const LabeledPath&, const LabeledPath&) = default;

 private:
  std::vector<Edge> edges_;
};

enum class Condition : std::uint8_t {
  first_edge = 1,     // (1)
  same_direction = 2, // (2)
  perpendicular = 3,  // (3)
  label_range = 0,    // label < 1, or empty path
};

struct Violation {
  Condition condition;
  int index;  // 1-based edge index; junction violations name the first edge

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& violation);

// nullopt when the path satisfies (1)-(3); otherwise the first violation.
std::optional<Violation> validate(const LabeledPath& path);

// Conditions (2)/(3) for the junction between edges `index` and `index+1`.
bool junction_allows(const Edge& current, const Edge& next, int index);

LabeledPath perm_to_path(const Permutation& p);

// Throws InvalidArgument on an invalid path.
Permutation path_to_perm(const LabeledPath& path);

enum class Restriction : std::uint8_t {
  all,     // P(n,k)
  v,       // V(n,k): every even-indexed edge horizontal
  vprime,  // V'(n,k): every odd-indexed edge with index >= 3 horizontal
};

std::string_view to_string(Restriction restriction);
std::optional<Restriction> parse_restriction(std::string_view name);

bool is_V(const LabeledPath& path);
bool is_Vprime(const LabeledPath& path);
bool satisfies(const LabeledPath& path, Restriction restriction);

// Whether edge `index` may be vertical under `restriction`.
bool vertical_allowed(Restriction restriction, int index);

// Every valid path of length n with exactly k vertical edges that meets
// the restriction, lexicographic on (direction, label) edge by edge.
std::vector<LabeledPath> enumerate_paths(int n, int k, Restriction restriction,
                                         const Limits& limits = {});

// Same count by dynamic programming over (index, direction, label, verticals).
BigInt count_paths_dp(int n, int k, Restriction restriction);

// Labels admissible for edge index+1 in direction `next` after `current`
// at `index`: the interval 1..returned bound (empty when 0).
int max_next_label(const Edge& current, int index, Direction next);

}  // namespace runpoly
