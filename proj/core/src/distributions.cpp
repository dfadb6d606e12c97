#include "runpoly/distributions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "runpoly/errors.hpp"
#include "runpoly/permutation.hpp"

namespace runpoly {

std::string_view to_string(Statistic statistic) {
  switch (statistic) {
    case Statistic::runs: return "runs";
    case Statistic::t: return "t";
    case Statistic::descents: return "descents";
    case Statistic::half_ascending_descents: return "half-ascending";
    case Statistic::odd_half_ascending: return "odd-t";
  }
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
  for (auto s : {Statistic::runs, Statistic::t, Statistic::descents,
                 Statistic::half_ascending_descents, Statistic::odd_half_ascending}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

DistributionTable::DistributionTable(int n, Statistic statistic, int j,
                                     std::map<int, BigInt> counts)
    : n_(n), statistic_(statistic), j_(j), counts_(std::move(counts)) {
  std::erase_if(counts_, [](const auto& kv) { return kv.second == 0; });
}

BigInt DistributionTable::count(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt DistributionTable::total() const {
  BigInt sum = 0;
  for (const auto& [k, c] : counts_) sum += c;
  return sum;
}

int DistributionTable::k_min() const { return counts_.empty() ? 0 : counts_.begin()->first; }
int DistributionTable::k_max() const { return counts_.empty() ? -1 : counts_.rbegin()->first; }

bool DistributionTable::has_contiguous_support() const {
  return counts_.empty() ||
         static_cast<int>(counts_.size()) == k_max() - k_min() + 1;
}

IntPolynomial DistributionTable::polynomial() const {
  if (counts_.empty()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(k_max()) + 1);
  for (const auto& [k, v] : counts_) c[static_cast<std::size_t>(k)] = v;
  return IntPolynomial(std::move(c));
}

namespace {

// Statistic value for one permutation, or -1 to leave it out.
using Classifier = std::function<int(std::span<const int>)>;

// Counts permutations of {1..n} by classifier value. Work is split by
// first entry; per-worker tallies are summed, so the result does not
// depend on the number of workers.
std::vector<std::uint64_t> tally(int n, const TableOptions& options,
                                 const Classifier& classify) {
  int workers = options.workers > 0
                    ? options.workers
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::clamp(workers, 1, n);

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  auto run = [&](int worker) {
    auto& counts = partial[worker];
    for (int first = worker + 1; first <= n; first += workers) {
      for_each_sequence(n, first, [&](std::span<const int> p) {
        const int k = classify(p);
        if (k >= 0) ++counts[static_cast<std::size_t>(k)];
      });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<std::uint64_t> merged(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& counts : partial) {
    for (std::size_t k = 0; k < merged.size(); ++k) merged[k] += counts[k];
  }
  return merged;
}

std::map<int, BigInt> to_counts(const std::vector<std::uint64_t>& tallies, unsigned scale = 1) {
  std::map<int, BigInt> counts;
  for (std::size_t k = 0; k < tallies.size(); ++k) {
    if (tallies[k] != 0) counts.emplace(static_cast<int>(k), BigInt(tallies[k]) * scale);
  }
  return counts;
}

void require_t_range(int n, int j) {
  if (n < 4) throw InvalidArgument("t tables need n >= 4");
  const int m = max_half_ascending_index(n);
  if (j < 1 || j > m) {
    throw InvalidArgument("j = " + std::to_string(j) + " outside 1.." + std::to_string(m) +
                          " for n = " + std::to_string(n));
  }
}

}  // namespace

DistributionTable run_distribution(int n, const TableOptions& options) {
  if (n < 2) throw InvalidArgument("run_distribution needs n >= 2");
  require_table_n(n, options.limits);
  auto t = tally(n, options, [](std::span<const int> p) { return seq::run_count(p); });
  return DistributionTable(n, Statistic::runs, 0, to_counts(t));
}

DistributionTable t_distribution(int n, int j, const TableOptions& options) {
  require_t_range(n, j);
  require_table_n(n, options.limits);
  auto t = tally(n, options, [j](std::span<const int> p) {
    return seq::is_j_half_ascending(p, j) ? seq::normalized_t_statistic(p, j) : -1;
  });
  return DistributionTable(n, Statistic::t, j, to_counts(t));
}

DistributionTable descent_distribution(int n, const TableOptions& options) {
  if (n < 1) throw InvalidArgument("descent_distribution needs n >= 1");
  require_table_n(n, options.limits);
  auto t = tally(n, options, [](std::span<const int> p) { return seq::descent_count(p); });
  return DistributionTable(n, Statistic::descents, 0, to_counts(t));
}

DistributionTable half_ascending_descent_distribution(int n, const TableOptions& options) {
  if (n % 2 != 0) {
    throw InvalidArgument("half-ascending descent table is for even n; use odd-t for odd n");
  }
  if (n < 4) throw InvalidArgument("half-ascending descent table needs n >= 4");
  require_table_n(n, options.limits);
  auto t = tally(n, options, [](std::span<const int> p) {
    return seq::is_fully_half_ascending(p) ? seq::descent_count(p) : -1;
  });
  return DistributionTable(n, Statistic::half_ascending_descents, 0, to_counts(t));
}

DistributionTable odd_t_distribution(int n, const TableOptions& options) {
  if (n % 2 == 0) throw InvalidArgument("odd-t table is for odd n; use half-ascending for even n");
  if (n < 5) throw InvalidArgument("odd-t table needs n >= 5");
  require_table_n(n, options.limits);
  auto t = tally(n, options, [](std::span<const int> p) {
    return seq::is_fully_half_ascending(p) ? seq::descent_count(p) : -1;
  });
  // Complement symmetry contributes the p_2 > p_3 half.
  return DistributionTable(n, Statistic::odd_half_ascending, 0, to_counts(t, 2));
}

DistributionTable build_table(Statistic statistic, int n, int j, const TableOptions& options) {
  switch (statistic) {
    case Statistic::runs: return run_distribution(n, options);
    case Statistic::t: return t_distribution(n, j, options);
    case Statistic::descents: return descent_distribution(n, options);
    case Statistic::half_ascending_descents: return half_ascending_descent_distribution(n, options);
    case Statistic::odd_half_ascending: return odd_t_distribution(n, options);
  }
  throw InvalidArgument("unknown statistic");
}

FactorizationResult factorize_runs_polynomial(int n, const TableOptions& options) {
  if (n < 4) throw InvalidArgument("factorization needs n >= 4");
  require_table_n(n, options.limits);

  FactorizationResult result;
  result.n = n;
  result.m = max_half_ascending_index(n);
  result.runs = run_distribution(n, options).polynomial();
  result.reference = n % 2 == 0
                         ? t_distribution(n, result.m, options).polynomial()
                         : odd_t_distribution(n, options).polynomial();

  try {
    const IntPolynomial reduced = result.runs.shifted_down(1);
    result.quotient = divide_exact_x_plus_1(reduced, static_cast<std::size_t>(result.m));
    result.divisible = true;
  } catch (const Error& e) {
    result.failure = e.what();
    return result;
  }
  result.t_polynomial = result.quotient.shifted_up(1);
  result.reconstructed =
      IntPolynomial::x_plus_1_power(static_cast<std::size_t>(result.m)) * result.t_polynomial;

  const IntPolynomial& compared = n % 2 == 0 ? result.t_polynomial : result.quotient;
  if (result.reconstructed != result.runs) {
    result.failure = "x (x+1)^m quotient does not reconstruct R_n";
  } else if (!has_nonnegative_coefficients(result.quotient)) {
    result.failure = "quotient has a negative coefficient: " + result.quotient.str();
  } else if (compared != result.reference) {
    result.failure = "quotient " + compared.str() + " differs from enumerated " +
                     result.reference.str();
  } else {
    result.verified = true;
  }
  return result;
}

InvarianceCheck verify_pair_invariance(int n, int j, int i, const TableOptions& options) {
  require_t_range(n, j);
  if (i < 1 || i > n - 2 * j - 1) {
    throw InvalidArgument("i = " + std::to_string(i) + " outside 1.." +
                          std::to_string(n - 2 * j - 1));
  }
  require_table_n(n, options.limits);
  InvarianceCheck check;
  check.full = t_distribution(n, j, options).polynomial();
  auto t = tally(n, options, [j, i](std::span<const int> p) {
    if (!seq::is_j_half_ascending(p, j) || p[i - 1] > p[i]) return -1;
    return seq::normalized_t_statistic(p, j);
  });
  check.restricted = DistributionTable(n, Statistic::t, j, to_counts(t)).polynomial();
  check.holds = check.restricted.scaled(2) == check.full;
  return check;
}

}  // namespace runpoly
