#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "runpoly/lattice_path.hpp"
#include "runpoly/limits.hpp"

namespace runpoly {

struct Point {
  long x = 0;
  long y = 0;
  long coordinate_sum() const noexcept { return x + y; }
  friend auto operator<=>(const Point&, const Point&) = default;
};

// A LabeledPath placed on the grid: points[t] is the endpoint of edge t,
// points[0] the origin. Every step adds one to the coordinate sum.
class EmbeddedPath {
 public:
  EmbeddedPath(LabeledPath path, Point origin);

  const LabeledPath& path() const noexcept { return path_; }
  Point origin() const noexcept { return points_.front(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  Point end() const noexcept { return points_.back(); }

 private:
  LabeledPath path_;
  std::vector<Point> points_;
};

inline constexpr Point kLowerOrigin{0, 0};
inline constexpr Point kUpperOrigin{1, -1};

// P from (0,0), Q from (1,-1). Requires valid paths of equal length with
// vertical counts k-1 and k+1 for some k >= 1 with k+1 <= n-1.
std::pair<EmbeddedPath, EmbeddedPath> embed_pair(const LabeledPath& p, const LabeledPath& q);

struct Intersection {
  Point point;
  int offset = 0;  // edges preceding the point on both paths
};

// Common point of minimal coordinate sum. Both origins have coordinate sum
// 0, so common points sit at equal offsets along both paths.
std::optional<Intersection> find_first_intersection(const EmbeddedPath& p, const EmbeddedPath& q);

// Throws NoIntersection when the paths never meet.
Intersection first_intersection(const EmbeddedPath& p, const EmbeddedPath& q);

// How the four edges at X are arranged. P always arrives horizontally and
// Q vertically at a first intersection; what differs is how they leave.
enum class JunctionShape : std::uint8_t {
  crossing,      // P leaves east, Q leaves north
  touching,      // P leaves north, Q leaves east
  shared_east,   // both leave east (B = D)
  shared_north,  // both leave north (B = D)
};

std::string_view to_string(JunctionShape shape);

struct Junction {
  int a = 0;  // P's edge into X
  int b = 0;  // P's edge out of X
  int c = 0;  // Q's edge into X
  int d = 0;  // Q's edge out of X
  int i = 0;  // i - 1 is the coordinate sum of X
  JunctionShape shape = JunctionShape::crossing;
};

struct PhiFailure {
  bool in_p_prime = true;  // false: Q' failed
  Violation violation;
};

struct PhiOutcome {
  enum class Status : std::uint8_t { defined, undefined };

  Status status = Status::undefined;
  std::optional<std::pair<LabeledPath, LabeledPath>> pair;  // (P', Q') when defined
  std::optional<PhiFailure> reason;                         // when undefined
  Intersection intersection;
  Junction junction;

  bool defined() const noexcept { return status == Status::defined; }
};

// Swaps the tails of P and Q after their first intersection and revalidates
// both results. `k` is the vertical count of the outputs. Throws
// InvalidArgument when (P, Q) is not in P(n,k-1) x P(n,k+1).
PhiOutcome apply_phi(const LabeledPath& p, const LabeledPath& q, int k);

// Junction-only predicates for the crossing shape: membership of the
// configuration in the domain (a >= b, c >= d) and in the image
// (a + d <= i, b + c <= i).
bool crossing_domain_allows(const Junction& junction);
bool crossing_image_allows(const Junction& junction);

struct AuditOptions {
  Limits limits;
};

struct AuditRecord {
  int n = 0;
  int k = 0;
  Restriction restriction = Restriction::all;

  std::uint64_t source_lower = 0;  // |P(n,k-1)| under the restriction
  std::uint64_t source_upper = 0;  // |P(n,k+1)|
  std::uint64_t target = 0;        // |P(n,k)|

  std::uint64_t domain_pairs = 0;
  std::uint64_t defined = 0;
  std::uint64_t undefined = 0;
  bool injective = true;
  std::uint64_t target_intersecting_pairs = 0;
  std::uint64_t image_size = 0;
  std::uint64_t intersecting_nonimage = 0;

  bool image_intersects = true;        // every image pair meets, at X
  bool closure = true;                 // image stays inside the restriction
  bool deficit_dominated = true;       // undefined <= intersecting_nonimage
  bool log_concave_inequality = true;  // source_lower * source_upper <= target^2

  std::uint64_t shared_next_edge_cases = 0;  // B = D
  std::uint64_t crossing_cases = 0;
  std::uint64_t crossing_disagreements = 0;  // specialized vs generic validity

  double elapsed_seconds = 0.0;

  bool passed() const noexcept {
    return injective && image_intersects && closure && deficit_dominated &&
           log_concave_inequality && crossing_disagreements == 0 && defined == image_size;
  }
};

// Exhaustively applies phi to every pair of P(n,k-1) x P(n,k+1) under the
// restriction and counts intersecting pairs of P(n,k) x P(n,k). Requires
// 1 <= k <= n-2. Throws GuardViolation when a pair space exceeds max_pairs.
AuditRecord audit_quasi_injection(int n, int k, Restriction restriction,
                                  const AuditOptions& options = {});

}  // namespace runpoly
