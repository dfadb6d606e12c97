#include "runpoly/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "runpoly/errors.hpp"

namespace runpoly {

void require_enumeration_n(int n, const Limits& limits) {
  if (n > limits.max_enumeration_n) {
    throw GuardViolation("n = " + std::to_string(n) +
                         " exceeds the enumeration guard (max " +
                         std::to_string(limits.max_enumeration_n) +
                         "); raise it with --max-n");
  }
}

void require_table_n(int n, const Limits& limits) {
  if (n > limits.max_table_n) {
    throw GuardViolation("n = " + std::to_string(n) +
                         " exceeds the table guard (max " +
                         std::to_string(limits.max_table_n) +
                         "); raise it with --max-n");
  }
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) throw InvalidArgument("a permutation needs at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw InvalidArgument("entries are not a permutation of 1.." +
                            std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (separated) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i == text.size()) break;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{} || ptr == text.data() + i) {
        throw InvalidArgument("malformed permutation: '" + std::string(text) + "'");
      }
      values.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidArgument("malformed permutation: '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::reversal(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v), Unchecked{});
}

std::string Permutation::str() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace seq {

int run_count(std::span<const int> values) {
  const auto n = values.size();
  if (n < 2) return 0;
  int changes = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool up_before = values[i - 1] < values[i];
    const bool up_after = values[i] < values[i + 1];
    if (up_before != up_after) ++changes;
  }
  return 1 + changes;
}

int descent_count(std::span<const int> values) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] > values[i + 1]) ++d;
  }
  return d;
}

bool is_j_half_ascending(std::span<const int> values, int j) {
  const int n = static_cast<int>(values.size());
  for (int i = 1; i <= j; ++i) {
    // p_{n+1-2i} < p_{n+2-2i}, shifted to 0-based storage.
    if (values[n - 2 * i] > values[n + 1 - 2 * i]) return false;
  }
  return true;
}

bool is_fully_half_ascending(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  return is_j_half_ascending(values, n / 2);
}

int t_statistic(std::span<const int> values, int j) {
  const auto n = values.size();
  if (j == 0) return run_count(values);
  const auto split = n - 2 * static_cast<std::size_t>(j);
  return run_count(values.first(split)) + descent_count(values.subspan(split - 1));
}

int normalized_t_statistic(std::span<const int> values, int j) {
  const int n = static_cast<int>(values.size());
  const int a = n - 2 * j - 1;  // 1-based position that must be an ascent
  if (values[a - 1] < values[a]) return t_statistic(values, j);
  std::vector<int> mirrored(values.begin(), values.end());
  for (int& v : mirrored) v = n + 1 - v;
  for (int i = 1; i <= j; ++i) std::swap(mirrored[n - 2 * i], mirrored[n + 1 - 2 * i]);
  return t_statistic(mirrored, j);
}

}  // namespace seq

int max_half_ascending_index(int n) { return n >= 2 ? (n - 2) / 2 : 0; }

namespace {

void require_j(const Permutation& p, int j, int lowest) {
  const int m = max_half_ascending_index(p.size());
  if (j < lowest || j > m) {
    throw InvalidArgument("j = " + std::to_string(j) + " outside " +
                          std::to_string(lowest) + ".." + std::to_string(m) +
                          " for n = " + std::to_string(p.size()));
  }
}

}  // namespace

int run_count(const Permutation& p) { return seq::run_count(p.entries()); }

int descent_count(const Permutation& p) { return seq::descent_count(p.entries()); }

std::vector<int> descent_positions(const Permutation& p) {
  return run_statistics(p).descent_positions;
}

RunStatistics run_statistics(const Permutation& p) {
  RunStatistics stats;
  stats.runs = run_count(p);
  for (int i = 1; i < p.size(); ++i) {
    (p.at(i) > p.at(i + 1) ? stats.descent_positions : stats.ascent_positions).push_back(i);
  }
  return stats;
}

Permutation complement(const Permutation& p) {
  std::vector<int> q(p.entries().begin(), p.entries().end());
  const int n = p.size();
  for (int& v : q) v = n + 1 - v;
  return Permutation(std::move(q));
}

Permutation standardize(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw InvalidArgument("standardize needs distinct values");
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  if (ranks.empty()) throw InvalidArgument("standardize needs at least one value");
  return Permutation(std::move(ranks), Permutation::Unchecked{});
}

bool is_j_half_ascending(const Permutation& p, int j) {
  require_j(p, j, 0);
  return seq::is_j_half_ascending(p.entries(), j);
}

bool is_fully_half_ascending(const Permutation& p) {
  return seq::is_fully_half_ascending(p.entries());
}

int t_statistic(const Permutation& p, int j) {
  require_j(p, j, 0);
  return seq::t_statistic(p.entries(), j);
}

Permutation involution_I(const Permutation& p, int j) {
  require_j(p, j, 1);
  std::vector<int> q(p.entries().begin(), p.entries().end());
  const int n = p.size();
  std::swap(q[n - 2 * j], q[n + 1 - 2 * j]);
  return Permutation(std::move(q));
}

Permutation paired_complement(const Permutation& p, int j) {
  require_j(p, j, 0);
  Permutation q = complement(p);
  for (int i = 1; i <= j; ++i) q = involution_I(q, i);
  return q;
}

int normalized_t_statistic(const Permutation& p, int j) {
  require_j(p, j, 1);
  return seq::normalized_t_statistic(p.entries(), j);
}

PermutationStream::PermutationStream(int n, PermutationPredicate filter,
                                     const Limits& limits)
    : filter_(std::move(filter)) {
  if (n < 1) throw InvalidArgument("n must be positive");
  require_enumeration_n(n, limits);
  current_.resize(n);
  for (int i = 0; i < n; ++i) current_[i] = i + 1;
}

std::optional<Permutation> PermutationStream::next() {
  while (!exhausted_) {
    Permutation candidate(current_, Permutation::Unchecked{});
    exhausted_ = !std::next_permutation(current_.begin(), current_.end());
    if (!filter_ || filter_(candidate)) return candidate;
  }
  return std::nullopt;
}

std::vector<Permutation> enumerate_permutations(int n, PermutationPredicate filter,
                                                const Limits& limits) {
  PermutationStream stream(n, std::move(filter), limits);
  std::vector<Permutation> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

void for_each_sequence(int n, int first,
                       const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<int> values(n);
  if (first == 0) {
    for (int i = 0; i < n; ++i) values[i] = i + 1;
    do {
      visit(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return;
  }
  if (first < 1 || first > n) throw InvalidArgument("first entry out of range");
  values[0] = first;
  for (int i = 1, v = 1; i < n; ++v) {
    if (v != first) values[i++] = v;
  }
  do {
    visit(values);
  } while (std::next_permutation(values.begin() + 1, values.end()));
}

}  // namespace runpoly
