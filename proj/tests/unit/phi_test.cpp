#include <gtest/gtest.h>

#include <set>

#include "frozen.hpp"
#include "runpoly/errors.hpp"
#include "runpoly/phi.hpp"

using namespace runpoly;

namespace {

// Direct point-set intersection of the two embedded point lists.
std::optional<Point> brute_first_meeting(const EmbeddedPath& p, const EmbeddedPath& q) {
  std::optional<Point> best;
  for (const auto& a : p.points()) {
    for (const auto& b : q.points()) {
      if (a == b && (!best || a.coordinate_sum() < best->coordinate_sum())) best = a;
    }
  }
  return best;
}

}  // namespace

TEST(Embed, Endpoints) {
  const auto [p3, q3] = embed_pair(LabeledPath::parse("H1 H1 H1"), LabeledPath::parse("H1 V1 V1"));
  EXPECT_EQ(q3.origin(), (Point{1, -1}));
  EXPECT_EQ(q3.end(), (Point{2, 1}));
  EXPECT_EQ(p3.end(), (Point{3, 0}));
  EXPECT_THROW(embed_pair(LabeledPath::parse("H1 H1"), LabeledPath::parse("H1 H1")), InvalidArgument);
  EXPECT_THROW(embed_pair(LabeledPath::parse("H1 H1"), LabeledPath::parse("H1 V1 V1")), InvalidArgument);
}

TEST(Embed, EndpointFormulaForAllPairs) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      for (const auto& p : enumerate_paths(n, k - 1, Restriction::all)) {
        for (const auto& q : enumerate_paths(n, k + 1, Restriction::all)) {
          const auto [ep, eq] = embed_pair(p, q);
          ASSERT_EQ(ep.end(), (Point{n - k + 1, k - 1}));
          ASSERT_EQ(eq.end(), (Point{n - k, k}));
          ASSERT_EQ(ep.points().size(), static_cast<std::size_t>(n + 1));
          for (std::size_t t = 1; t < ep.points().size(); ++t) {
            ASSERT_EQ(ep.points()[t].coordinate_sum(), ep.points()[t - 1].coordinate_sum() + 1);
          }
        }
      }
    }
  }
}

TEST(FirstIntersection, Examples) {
  const EmbeddedPath p(LabeledPath::parse("H1 H1"), kLowerOrigin);
  const EmbeddedPath q(LabeledPath::parse("H1 V1"), kUpperOrigin);
  const auto x = first_intersection(p, q);
  EXPECT_EQ(x.point, (Point{2, 0}));
  EXPECT_EQ(x.offset, 2);

  const EmbeddedPath a(LabeledPath::parse("H1 H1 H1"), kLowerOrigin);
  const EmbeddedPath b(LabeledPath::parse("H1 H1 H1"), kUpperOrigin);
  EXPECT_FALSE(find_first_intersection(a, b));
  EXPECT_THROW(first_intersection(a, b), NoIntersection);
}

TEST(FirstIntersection, MatchesPointSetScan) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto paths = enumerate_paths(n, k, Restriction::all);
      for (int l = 0; l < n; ++l) {
        for (const auto& pp : paths) {
          for (const auto& qq : enumerate_paths(n, l, Restriction::all)) {
            const EmbeddedPath p(pp, kLowerOrigin);
            const EmbeddedPath q(qq, kUpperOrigin);
            const auto fast = find_first_intersection(p, q);
            const auto slow = brute_first_meeting(p, q);
            ASSERT_EQ(fast.has_value(), slow.has_value());
            if (fast) {
              ASSERT_EQ(fast->point, *slow);
              ASSERT_EQ(p.points()[static_cast<std::size_t>(fast->offset)], *slow);
              ASSERT_EQ(q.points()[static_cast<std::size_t>(fast->offset)], *slow);
            }
          }
        }
      }
    }
  }
}

TEST(ApplyPhi, MinimalCase) {
  const auto outcome = apply_phi(LabeledPath::parse("H1 H1 H1"), LabeledPath::parse("H1 V1 V1"), 1);
  ASSERT_TRUE(outcome.defined());
  EXPECT_EQ(outcome.intersection.point, (Point{2, 0}));
  EXPECT_EQ(outcome.intersection.offset, 2);
  EXPECT_EQ(outcome.pair->first, LabeledPath::parse("H1 H1 V1"));
  EXPECT_EQ(outcome.pair->second, LabeledPath::parse("H1 V1 H1"));
}

TEST(ApplyPhi, DomainChecks) {
  EXPECT_THROW(apply_phi(LabeledPath::parse("H1 H1"), LabeledPath::parse("H1 V1"), 2), InvalidArgument);
  EXPECT_THROW(apply_phi(LabeledPath::parse("H1 H2 H1"), LabeledPath::parse("H1 V1 V1"), 1), InvalidArgument);
}

TEST(ApplyPhi, StructuralInvariantsExhaustive) {
  int undefined_seen = 0;
  int shared_seen = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      for (const auto& p : enumerate_paths(n, k - 1, Restriction::all)) {
        for (const auto& q : enumerate_paths(n, k + 1, Restriction::all)) {
          const auto out = apply_phi(p, q, k);
          const int t = out.intersection.offset;
          ASSERT_GE(t, 1);
          ASSERT_LT(t, n);
          const auto& j = out.junction;
          ASSERT_EQ(j.i, t + 1);
          ASSERT_EQ(out.intersection.point.coordinate_sum(), j.i - 1);
          // P reaches X horizontally and Q vertically.
          ASSERT_EQ(p.edge(t).dir, Direction::horizontal);
          ASSERT_EQ(q.edge(t).dir, Direction::vertical);
          if (j.shape == JunctionShape::shared_east || j.shape == JunctionShape::shared_north) ++shared_seen;
          if (!out.defined()) {
            ++undefined_seen;
            ASSERT_TRUE(out.reason);
            ASSERT_FALSE(out.pair);
            ASSERT_NE(out.reason->violation.condition, Condition::first_edge);
            ASSERT_EQ(out.reason->violation.index, t);
            continue;
          }
          const auto& [pp, qq] = *out.pair;
          ASSERT_FALSE(validate(pp));
          ASSERT_FALSE(validate(qq));
          ASSERT_EQ(pp.vertical_count(), k);
          ASSERT_EQ(qq.vertical_count(), k);
          for (int e = 1; e <= n; ++e) {
            ASSERT_EQ(pp.edge(e), e <= t ? p.edge(e) : q.edge(e));
            ASSERT_EQ(qq.edge(e), e <= t ? q.edge(e) : p.edge(e));
          }
          if (j.shape == JunctionShape::crossing) {
            ASSERT_TRUE(crossing_domain_allows(j));
            ASSERT_TRUE(crossing_image_allows(j));
          }
        }
      }
    }
  }
  EXPECT_GT(undefined_seen, 0);
  EXPECT_GT(shared_seen, 0);
}

TEST(ApplyPhi, InjectiveWithSeenSet) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      std::set<std::pair<LabeledPath, LabeledPath>> seen;
      for (const auto& p : enumerate_paths(n, k - 1, Restriction::all)) {
        for (const auto& q : enumerate_paths(n, k + 1, Restriction::all)) {
          const auto out = apply_phi(p, q, k);
          if (out.defined()) ASSERT_TRUE(seen.insert(*out.pair).second);
        }
      }
    }
  }
}

TEST(Audit, FrozenCounts) {
  for (const auto& row : frozen::kAudits) {
    const auto r = audit_quasi_injection(row.n, row.k, *parse_restriction(row.restriction));
    SCOPED_TRACE(std::to_string(row.n) + " " + std::to_string(row.k) + " " + row.restriction);
    EXPECT_EQ(static_cast<long long>(r.domain_pairs), row.domain);
    EXPECT_EQ(static_cast<long long>(r.undefined), row.undefined);
    EXPECT_EQ(static_cast<long long>(r.image_size), row.image);
    EXPECT_EQ(static_cast<long long>(r.target_intersecting_pairs), row.intersecting);
    EXPECT_EQ(static_cast<long long>(r.intersecting_nonimage), row.nonimage);
    EXPECT_EQ(static_cast<long long>(r.shared_next_edge_cases), row.shared_next_edge);
    EXPECT_EQ(r.defined + r.undefined, r.domain_pairs);
    EXPECT_TRUE(r.passed());
  }
}

TEST(Audit, EveryCellUpToSix) {
  bool any_shared = false;
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      for (auto r : {Restriction::all, Restriction::v, Restriction::vprime}) {
        const auto a = audit_quasi_injection(n, k, r);
        EXPECT_TRUE(a.passed()) << n << " " << k << " " << to_string(r);
        EXPECT_EQ(a.domain_pairs, a.source_lower * a.source_upper);
        EXPECT_EQ(a.crossing_disagreements, 0u);
        any_shared |= a.shared_next_edge_cases > 0;
      }
    }
  }
  EXPECT_TRUE(any_shared);
}

TEST(Audit, SmallExample) {
  const auto r = audit_quasi_injection(4, 2, Restriction::all);
  EXPECT_EQ(r.source_lower, 11u);
  EXPECT_EQ(r.source_upper, 1u);
  EXPECT_EQ(r.target, 11u);
  EXPECT_TRUE(r.log_concave_inequality);
}

TEST(Audit, Guards) {
  EXPECT_THROW(audit_quasi_injection(4, 3, Restriction::all), InvalidArgument);
  EXPECT_THROW(audit_quasi_injection(4, 0, Restriction::all), InvalidArgument);
  Limits tight;
  tight.max_pairs = 100;
  EXPECT_THROW(audit_quasi_injection(6, 2, Restriction::all, {tight}), GuardViolation);
}
