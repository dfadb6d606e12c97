#include "runpoly/phi.hpp"

#include <chrono>
#include <unordered_map>

#include "runpoly/errors.hpp"

namespace runpoly {

EmbeddedPath::EmbeddedPath(LabeledPath path, Point origin) : path_(std::move(path)) {
  points_.reserve(path_.edges().size() + 1);
  points_.push_back(origin);
  Point at = origin;
  for (const auto& e : path_.edges()) {
    (e.dir == Direction::horizontal ? at.x : at.y) += 1;
    points_.push_back(at);
  }
}

std::string_view to_string(JunctionShape shape) {
  switch (shape) {
    case JunctionShape::crossing: return "crossing";
    case JunctionShape::touching: return "touching";
    case JunctionShape::shared_east: return "shared-east";
    case JunctionShape::shared_north: return "shared-north";
  }
  return "?";
}

namespace {

void require_domain_pair(const LabeledPath& p, const LabeledPath& q, int k) {
  const int n = p.size();
  if (q.size() != n) throw InvalidArgument("phi needs paths of equal length");
  if (k < 1 || k + 1 > n - 1) {
    throw InvalidArgument("phi needs 1 <= k and k+1 <= n-1 (k = " + std::to_string(k) + ")");
  }
  if (p.vertical_count() != k - 1 || q.vertical_count() != k + 1) {
    throw InvalidArgument("phi needs vertical counts k-1 and k+1, got " +
                          std::to_string(p.vertical_count()) + " and " +
                          std::to_string(q.vertical_count()));
  }
  if (auto v = validate(p)) throw InvalidArgument("P is not a valid path: " + describe(*v));
  if (auto v = validate(q)) throw InvalidArgument("Q is not a valid path: " + describe(*v));
}

// verticals[t] = number of vertical edges among the first t.
std::vector<int> vertical_prefix(const LabeledPath& path) {
  std::vector<int> prefix(path.edges().size() + 1, 0);
  for (std::size_t t = 0; t < path.edges().size(); ++t) {
    prefix[t + 1] = prefix[t] + (path.edges()[t].dir == Direction::vertical ? 1 : 0);
  }
  return prefix;
}

// With P at (0,0) and Q at (1,-1), the points at offset t coincide exactly
// when Q has climbed one more step than P.
std::optional<int> first_meeting_offset(const std::vector<int>& lower, const std::vector<int>& upper) {
  for (std::size_t t = 0; t < lower.size(); ++t) {
    if (upper[t] == lower[t] + 1) return static_cast<int>(t);
  }
  return std::nullopt;
}

Junction read_junction(const LabeledPath& p, const LabeledPath& q, int offset) {
  Junction j;
  j.i = offset + 1;
  j.a = p.edge(offset).label;
  j.c = q.edge(offset).label;
  j.b = p.edge(offset + 1).label;
  j.d = q.edge(offset + 1).label;
  const bool p_east = p.edge(offset + 1).dir == Direction::horizontal;
  const bool q_east = q.edge(offset + 1).dir == Direction::horizontal;
  if (p_east && !q_east) {
    j.shape = JunctionShape::crossing;
  } else if (!p_east && q_east) {
    j.shape = JunctionShape::touching;
  } else {
    j.shape = p_east ? JunctionShape::shared_east : JunctionShape::shared_north;
  }
  return j;
}

PhiOutcome swap_tails(const LabeledPath& p, const LabeledPath& q, int offset, Point x) {
  PhiOutcome outcome;
  outcome.intersection = {x, offset};
  outcome.junction = read_junction(p, q, offset);

  const auto& pe = p.edges();
  const auto& qe = q.edges();
  std::vector<Edge> lower(pe.begin(), pe.begin() + offset);
  lower.insert(lower.end(), qe.begin() + offset, qe.end());
  std::vector<Edge> upper(qe.begin(), qe.begin() + offset);
  upper.insert(upper.end(), pe.begin() + offset, pe.end());
  LabeledPath p_prime(std::move(lower));
  LabeledPath q_prime(std::move(upper));

  if (auto v = validate(p_prime)) {
    outcome.reason = PhiFailure{true, *v};
  } else if (auto w = validate(q_prime)) {
    outcome.reason = PhiFailure{false, *w};
  } else {
    outcome.status = PhiOutcome::Status::defined;
    outcome.pair.emplace(std::move(p_prime), std::move(q_prime));
  }
  return outcome;
}

// 5 bits per edge; enough for n <= 12 (labels <= 11).
std::uint64_t pack(const LabeledPath& path) {
  std::uint64_t key = 0;
  for (const auto& e : path.edges()) {
    key = (key << 5) | (static_cast<std::uint64_t>(e.dir) << 4) |
          static_cast<std::uint64_t>(e.label & 0xF);
  }
  return key;
}

std::uint64_t checked_count(int n, int k, Restriction r) {
  const BigInt c = count_paths_dp(n, k, r);
  return c.convert_to<std::uint64_t>();
}

void require_pairs(std::uint64_t a, std::uint64_t b, const Limits& limits, const char* what) {
  if (a != 0 && b > limits.max_pairs / a) {
    throw GuardViolation(std::string(what) + " pair space " + std::to_string(a) + " x " +
                         std::to_string(b) + " exceeds the pair guard (" +
                         std::to_string(limits.max_pairs) + ")");
  }
}

}  // namespace

std::pair<EmbeddedPath, EmbeddedPath> embed_pair(const LabeledPath& p, const LabeledPath& q) {
  require_domain_pair(p, q, p.vertical_count() + 1);
  return {EmbeddedPath(p, kLowerOrigin), EmbeddedPath(q, kUpperOrigin)};
}

std::optional<Intersection> find_first_intersection(const EmbeddedPath& p, const EmbeddedPath& q) {
  const auto& a = p.points();
  const auto& b = q.points();
  const long shift = q.origin().coordinate_sum() - p.origin().coordinate_sum();
  // Point t of one path and point t - shift of the other share a coordinate sum.
  for (std::size_t t = 0; t < a.size(); ++t) {
    const long u = static_cast<long>(t) - shift;
    if (u < 0 || u >= static_cast<long>(b.size())) continue;
    if (a[t] == b[static_cast<std::size_t>(u)]) return Intersection{a[t], static_cast<int>(t)};
  }
  return std::nullopt;
}

Intersection first_intersection(const EmbeddedPath& p, const EmbeddedPath& q) {
  if (auto x = find_first_intersection(p, q)) return *x;
  throw NoIntersection("paths " + p.path().str() + " and " + q.path().str() + " do not meet");
}

PhiOutcome apply_phi(const LabeledPath& p, const LabeledPath& q, int k) {
  require_domain_pair(p, q, k);
  const EmbeddedPath lower(p, kLowerOrigin);
  const EmbeddedPath upper(q, kUpperOrigin);
  const Intersection x = first_intersection(lower, upper);
  return swap_tails(p, q, x.offset, x.point);
}

bool crossing_domain_allows(const Junction& j) { return j.a >= j.b && j.c >= j.d; }

bool crossing_image_allows(const Junction& j) { return j.a + j.d <= j.i && j.b + j.c <= j.i; }

AuditRecord audit_quasi_injection(int n, int k, Restriction restriction,
                                  const AuditOptions& options) {
  if (k < 1 || k + 1 > n - 1) {
    throw InvalidArgument("audit needs 1 <= k <= n-2 (n = " + std::to_string(n) +
                          ", k = " + std::to_string(k) + ")");
  }
  require_enumeration_n(n, options.limits);
  if (n > 12) throw GuardViolation("phi audits pack paths into 64 bits and stop at n = 12");
  const auto started = std::chrono::steady_clock::now();

  AuditRecord record;
  record.n = n;
  record.k = k;
  record.restriction = restriction;
  record.source_lower = checked_count(n, k - 1, restriction);
  record.source_upper = checked_count(n, k + 1, restriction);
  record.target = checked_count(n, k, restriction);
  require_pairs(record.source_lower, record.source_upper, options.limits, "domain");
  require_pairs(record.target, record.target, options.limits, "target");

  const auto lower = enumerate_paths(n, k - 1, restriction, options.limits);
  const auto upper = enumerate_paths(n, k + 1, restriction, options.limits);
  const auto target = enumerate_paths(n, k, restriction, options.limits);

  std::unordered_map<std::uint64_t, std::uint32_t> target_index;
  target_index.reserve(target.size());
  std::vector<std::vector<int>> target_prefix;
  target_prefix.reserve(target.size());
  for (std::uint32_t i = 0; i < target.size(); ++i) {
    target_index.emplace(pack(target[i]), i);
    target_prefix.push_back(vertical_prefix(target[i]));
  }
  std::vector<std::vector<int>> upper_prefix;
  upper_prefix.reserve(upper.size());
  for (const auto& q : upper) upper_prefix.push_back(vertical_prefix(q));

  record.domain_pairs = record.source_lower * record.source_upper;
  std::vector<bool> seen(target.size() * target.size(), false);
  std::uint64_t image_meeting = 0;

  for (const auto& p : lower) {
    const auto p_prefix = vertical_prefix(p);
    for (std::size_t qi = 0; qi < upper.size(); ++qi) {
      const auto offset = first_meeting_offset(p_prefix, upper_prefix[qi]);
      if (!offset) {
        throw NoIntersection("domain pair without intersection: " + p.str() + " / " +
                             upper[qi].str());
      }
      const Point x{*offset - p_prefix[*offset], p_prefix[*offset]};
      const PhiOutcome outcome = swap_tails(p, upper[qi], *offset, x);

      const Junction& j = outcome.junction;
      if (j.shape == JunctionShape::crossing) {
        ++record.crossing_cases;
        if (!crossing_domain_allows(j) || crossing_image_allows(j) != outcome.defined()) {
          ++record.crossing_disagreements;
        }
      } else if (j.shape == JunctionShape::shared_east || j.shape == JunctionShape::shared_north) {
        ++record.shared_next_edge_cases;
      }

      if (!outcome.defined()) {
        ++record.undefined;
        continue;
      }
      ++record.defined;
      const auto& [p_prime, q_prime] = *outcome.pair;
      if (!satisfies(p_prime, restriction) || !satisfies(q_prime, restriction)) {
        record.closure = false;
        continue;
      }
      const auto a = target_index.find(pack(p_prime));
      const auto b = target_index.find(pack(q_prime));
      if (a == target_index.end() || b == target_index.end()) {
        record.closure = false;
        continue;
      }
      const auto meet = first_meeting_offset(target_prefix[a->second], target_prefix[b->second]);
      if (!meet || *meet != *offset) record.image_intersects = false;
      auto slot = seen[static_cast<std::size_t>(a->second) * target.size() + b->second];
      if (slot) {
        record.injective = false;
      } else {
        slot = true;
        ++record.image_size;
        if (meet) ++image_meeting;
      }
    }
  }

  for (const auto& a : target_prefix) {
    for (const auto& b : target_prefix) {
      if (first_meeting_offset(a, b)) ++record.target_intersecting_pairs;
    }
  }
  record.intersecting_nonimage = record.target_intersecting_pairs - image_meeting;
  record.deficit_dominated = record.undefined <= record.intersecting_nonimage;
  record.log_concave_inequality =
      BigInt(record.source_lower) * record.source_upper <= BigInt(record.target) * record.target;

  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return record;
}

}  // namespace runpoly
