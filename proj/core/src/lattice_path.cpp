#include "runpoly/lattice_path.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "runpoly/errors.hpp"

namespace runpoly {

LabeledPath LabeledPath::parse(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  for (skip(); i < text.size(); skip()) {
    const char d = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (d != 'H' && d != 'V') {
      throw InvalidArgument("malformed path: expected H or V at '" + std::string(text.substr(i)) + "'");
    }
    ++i;
    int label = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), label);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw InvalidArgument("malformed path: missing label after " + std::string(1, d));
    }
    i = static_cast<std::size_t>(ptr - text.data());
    edges.push_back({d == 'H' ? Direction::horizontal : Direction::vertical, label});
  }
  return LabeledPath(std::move(edges));
}

int LabeledPath::vertical_count() const noexcept {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.dir == Direction::vertical; }));
}

std::string LabeledPath::str() const {
  std::string out;
  for (const auto& e : edges_) {
    if (!out.empty()) out += ' ';
    out += e.dir == Direction::horizontal ? 'H' : 'V';
    out += std::to_string(e.label);
  }
  return out;
}

std::string describe(const Violation& violation) {
  const auto at = " at edge " + std::to_string(violation.index);
  switch (violation.condition) {
    case Condition::first_edge: return "condition (1): first edge must be H1" + at;
    case Condition::same_direction:
      return "condition (2): same-direction labels must not increase" + at;
    case Condition::perpendicular:
      return "condition (3): perpendicular labels exceed index + 1" + at;
    case Condition::label_range: return "labels must be positive and the path nonempty" + at;
  }
  return "unknown violation" + at;
}

bool junction_allows(const Edge& current, const Edge& next, int index) {
  if (current.dir == next.dir) return current.label >= next.label;
  return current.label + next.label <= index + 1;
}

std::optional<Violation> validate(const LabeledPath& path) {
  if (path.size() == 0) return Violation{Condition::label_range, 0};
  for (int i = 1; i <= path.size(); ++i) {
    if (path.edge(i).label < 1) return Violation{Condition::label_range, i};
  }
  const Edge& first = path.edge(1);
  if (first.dir != Direction::horizontal || first.label != 1) {
    return Violation{Condition::first_edge, 1};
  }
  for (int i = 1; i < path.size(); ++i) {
    const Edge& a = path.edge(i);
    const Edge& b = path.edge(i + 1);
    if (!junction_allows(a, b, i)) {
      return Violation{a.dir == b.dir ? Condition::same_direction : Condition::perpendicular, i};
    }
  }
  return std::nullopt;
}

LabeledPath perm_to_path(const Permutation& p) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p.size()));
  edges.push_back({Direction::horizontal, 1});
  for (int i = 2; i <= p.size(); ++i) {
    // q_i: rank of p_i among p_1..p_i.
    int q = 1;
    for (int j = 1; j < i; ++j) {
      if (p.at(j) < p.at(i)) ++q;
    }
    if (p.at(i - 1) > p.at(i)) {
      edges.push_back({Direction::vertical, q});
    } else {
      edges.push_back({Direction::horizontal, i + 1 - q});
    }
  }
  return LabeledPath(std::move(edges));
}

Permutation path_to_perm(const LabeledPath& path) {
  if (auto v = validate(path)) throw InvalidArgument("invalid path: " + describe(*v));
  // The last edge of each prefix fixes the rank of its final entry; rebuild
  // left to right by inserting each rank and shifting the entries above it.
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(path.size()));
  for (int len = 1; len <= path.size(); ++len) {
    const Edge& e = path.edge(len);
    const int rank = e.dir == Direction::vertical ? e.label : len + 1 - e.label;
    for (int& v : entries) {
      if (v >= rank) ++v;
    }
    entries.push_back(rank);
  }
  return Permutation(std::move(entries));
}

std::string_view to_string(Restriction restriction) {
  switch (restriction) {
    case Restriction::all: return "all";
    case Restriction::v: return "V";
    case Restriction::vprime: return "Vprime";
  }
  return "?";
}

std::optional<Restriction> parse_restriction(std::string_view name) {
  for (auto r : {Restriction::all, Restriction::v, Restriction::vprime}) {
    if (to_string(r) == name) return r;
  }
  if (name == "v") return Restriction::v;
  if (name == "vprime" || name == "V'") return Restriction::vprime;
  return std::nullopt;
}

bool vertical_allowed(Restriction restriction, int index) {
  switch (restriction) {
    case Restriction::all: return true;
    case Restriction::v: return index % 2 == 1;
    case Restriction::vprime: return index % 2 == 0 || index == 1;
  }
  return false;
}

bool satisfies(const LabeledPath& path, Restriction restriction) {
  for (int i = 1; i <= path.size(); ++i) {
    if (path.edge(i).dir == Direction::vertical && !vertical_allowed(restriction, i)) return false;
  }
  return true;
}

bool is_V(const LabeledPath& path) { return satisfies(path, Restriction::v); }
bool is_Vprime(const LabeledPath& path) { return satisfies(path, Restriction::vprime); }

int max_next_label(const Edge& current, int index, Direction next) {
  const int bound = current.dir == next ? current.label : index + 1 - current.label;
  return std::max(bound, 0);
}

namespace {

struct PathBuilder {
  int n;
  int k;
  Restriction restriction;
  std::vector<Edge> edges;
  std::vector<LabeledPath>* out;

  void extend(int verticals) {
    const int index = static_cast<int>(edges.size());
    if (index == n) {
      if (verticals == k) out->emplace_back(edges);
      return;
    }
    const int remaining = n - index;
    const Edge current = edges.back();
    for (auto dir : {Direction::horizontal, Direction::vertical}) {
      const bool vertical = dir == Direction::vertical;
      const int next_verticals = verticals + (vertical ? 1 : 0);
      if (vertical && !vertical_allowed(restriction, index + 1)) continue;
      if (next_verticals > k || next_verticals + (remaining - 1) < k) continue;
      const int top = max_next_label(current, index, dir);
      for (int label = 1; label <= top; ++label) {
        edges.push_back({dir, label});
        extend(next_verticals);
        edges.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<LabeledPath> enumerate_paths(int n, int k, Restriction restriction,
                                         const Limits& limits) {
  if (n < 1) throw InvalidArgument("paths need n >= 1");
  require_enumeration_n(n, limits);
  std::vector<LabeledPath> out;
  if (k < 0 || k > n - 1) return out;
  PathBuilder builder{n, k, restriction, {{Direction::horizontal, 1}}, &out};
  builder.edges.reserve(static_cast<std::size_t>(n));
  builder.extend(0);
  return out;
}

BigInt count_paths_dp(int n, int k, Restriction restriction) {
  if (n < 1 || k < 0 || k > n - 1) return 0;
  // ways[dir][label][verticals] for the current edge index; labels <= index.
  using Layer = std::vector<std::vector<std::vector<BigInt>>>;
  auto make_layer = [&](int max_label) {
    return Layer(2, std::vector<std::vector<BigInt>>(
                        static_cast<std::size_t>(max_label) + 1,
                        std::vector<BigInt>(static_cast<std::size_t>(k) + 1)));
  };
  Layer ways = make_layer(1);
  ways[0][1][0] = 1;
  for (int index = 1; index < n; ++index) {
    Layer next = make_layer(index + 1);
    for (int d = 0; d < 2; ++d) {
      for (int label = 1; label < static_cast<int>(ways[d].size()); ++label) {
        const Edge current{static_cast<Direction>(d), label};
        for (int v = 0; v <= k; ++v) {
          const BigInt& w = ways[d][label][v];
          if (w == 0) continue;
          for (int nd = 0; nd < 2; ++nd) {
            const auto dir = static_cast<Direction>(nd);
            const int nv = v + nd;
            if (nv > k) continue;
            if (dir == Direction::vertical && !vertical_allowed(restriction, index + 1)) continue;
            const int top = std::min(max_next_label(current, index, dir), index + 1);
            for (int nl = 1; nl <= top; ++nl) next[nd][nl][nv] += w;
          }
        }
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (int d = 0; d < 2; ++d) {
    for (const auto& by_label : ways[d]) total += by_label[static_cast<std::size_t>(k)];
  }
  return total;
}

}  // namespace runpoly
