#pragma once

// Slow reference implementations used only by tests. Each one derives its
// answer by a route that shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Number of maximal monotone segments, counted by splitting at every
// interior peak or valley.
inline int runs(const std::vector<int>& p) {
  if (p.size() < 2) return 0;
  int segments = 1;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const bool peak = p[i] > p[i - 1] && p[i] > p[i + 1];
    const bool valley = p[i] < p[i - 1] && p[i] < p[i + 1];
    if (peak || valley) ++segments;
  }
  return segments;
}

inline int descents(const std::vector<int>& p) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) d += p[i] > p[i + 1];
  return d;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// R(n,k) by the recurrence
//   R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2),  R(1,0) = 1.
inline std::vector<std::vector<long long>> run_table(int max_n) {
  std::vector<std::vector<long long>> r(static_cast<std::size_t>(max_n + 1),
                                        std::vector<long long>(static_cast<std::size_t>(max_n + 1), 0));
  r[1][0] = 1;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      long long v = k * r[n - 1][k] + 2 * r[n - 1][k - 1];
      if (k >= 2) v += (n - k) * r[n - 1][k - 2];
      r[n][k] = v;
    }
  }
  return r;
}

// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
inline std::vector<std::vector<long long>> eulerian_table(int max_n) {
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(max_n + 1),
                                        std::vector<long long>(static_cast<std::size_t>(max_n + 1), 0));
  a[1][0] = 1;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 0; k < n; ++k) {
      long long v = (k + 1) * a[n - 1][k];
      if (k >= 1) v += (n - k) * a[n - 1][k - 1];
      a[n][k] = v;
    }
  }
  return a;
}

inline std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

struct RawEdge {
  bool vertical;
  int label;
};

// Conditions checked straight from their statement, over 1-based indices.
inline bool raw_valid(const std::vector<RawEdge>& e) {
  if (e.empty() || e[0].vertical || e[0].label != 1) return false;
  for (std::size_t t = 0; t + 1 < e.size(); ++t) {
    const int i = static_cast<int>(t) + 1;
    if (e[t].label < 1 || e[t + 1].label < 1) return false;
    if (e[t].vertical == e[t + 1].vertical) {
      if (e[t].label < e[t + 1].label) return false;
    } else if (e[t].label + e[t + 1].label > i + 1) {
      return false;
    }
  }
  return true;
}

// restriction: 0 all, 1 even indices horizontal, 2 odd indices >= 3 horizontal.
inline bool raw_allowed(const std::vector<RawEdge>& e, int restriction) {
  for (std::size_t t = 0; t < e.size(); ++t) {
    const int i = static_cast<int>(t) + 1;
    if (!e[t].vertical) continue;
    if (restriction == 1 && i % 2 == 0) return false;
    if (restriction == 2 && i % 2 == 1 && i >= 3) return false;
  }
  return true;
}

// counts[k] of valid paths of length n with k verticals, found by trying
// every direction and every label 1..n at every edge.
inline std::map<int, long long> brute_path_counts(int n, int restriction) {
  std::map<int, long long> counts;
  std::vector<RawEdge> e(static_cast<std::size_t>(n));
  const long long choices = 2LL * n;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= choices;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    int verticals = 0;
    for (int i = 0; i < n; ++i) {
      const long long digit = c % choices;
      c /= choices;
      e[static_cast<std::size_t>(i)] = {digit >= n, static_cast<int>(digit % n) + 1};
      verticals += digit >= n;
    }
    if (raw_valid(e) && raw_allowed(e, restriction)) counts[verticals] += 1;
  }
  return counts;
}

}  // namespace oracle
