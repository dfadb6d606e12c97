#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "runpoly/bigint.hpp"
#include "runpoly/limits.hpp"
#include "runpoly/polynomial.hpp"

namespace runpoly {

enum class Statistic {
  runs,                     // R(n,k): run count over all of S_n
  t,                        // R_{n,j}: normalized t_j over j-half-ascending
  descents,                 // A(n,k): Eulerian numbers
  half_ascending_descents,  // U(n,k): fully half-ascending, by descents (even n)
  odd_half_ascending,       // T_n^odd: doubled, by descents (odd n)
};

std::string_view to_string(Statistic statistic);
std::optional<Statistic> parse_statistic(std::string_view name);

struct TableOptions {
  Limits limits;
  int workers = 0;  // 0 = hardware concurrency
};

// Exact counts indexed by k. Only k with a nonzero count are stored.
class DistributionTable {
 public:
  DistributionTable(int n, Statistic statistic, int j, std::map<int, BigInt> counts);

  int n() const noexcept { return n_; }
  Statistic statistic() const noexcept { return statistic_; }
  int j() const noexcept { return j_; }  // 0 unless statistic == t
  const std::map<int, BigInt>& counts() const noexcept { return counts_; }

  BigInt count(int k) const;
  BigInt total() const;
  int k_min() const;
  int k_max() const;
  bool has_contiguous_support() const;

  // sum_k count(k) x^k
  IntPolynomial polynomial() const;

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;

 private:
  int n_;
  Statistic statistic_;
  int j_;
  std::map<int, BigInt> counts_;
};

// R(n,k), k = 1..n-1. Requires 2 <= n.
DistributionTable run_distribution(int n, const TableOptions& options = {});

// R_{n,j}(x) coefficients: j-half-ascending permutations counted by
// normalized_t_statistic. Total n!/2^j. Requires n >= 4, 1 <= j <= m.
DistributionTable t_distribution(int n, int j, const TableOptions& options = {});

// A(n,k), k = 0..n-1. Requires 1 <= n.
DistributionTable descent_distribution(int n, const TableOptions& options = {});

// U(n,k) = |{p fully half-ascending : des(p) = k}|. Even n >= 4 only.
DistributionTable half_ascending_descent_distribution(int n, const TableOptions& options = {});

// 2 * |{p : p_2<p_3, p_4<p_5, ..., p_{n-1}<p_n, des(p) = k}|. Odd n >= 5.
DistributionTable odd_t_distribution(int n, const TableOptions& options = {});

// Dispatch by enum; `j` only used for Statistic::t.
DistributionTable build_table(Statistic statistic, int n, int j, const TableOptions& options = {});

struct FactorizationResult {
  int n = 0;
  int m = 0;                   // floor((n-2)/2)
  IntPolynomial runs;          // R_n(x)
  IntPolynomial quotient;      // R_n(x) / (x (x+1)^m)
  IntPolynomial t_polynomial;  // x * quotient = R_n(x) / (x+1)^m
  IntPolynomial reconstructed; // x (x+1)^m quotient
  IntPolynomial reference;     // enumerated T_n (even n) or T_n^odd (odd n)
  bool divisible = false;
  std::string failure;         // set when !verified
  bool verified = false;
};

// Peels x, divides by (x+1)^m and compares against the independently
// enumerated table: t_distribution(n, m) against t_polynomial for even n,
// odd_t_distribution(n) against quotient for odd n. Requires n >= 4.
FactorizationResult factorize_runs_polynomial(int n, const TableOptions& options = {});

struct InvarianceCheck {
  bool holds = false;
  IntPolynomial full;        // R_{n,j}(x)
  IntPolynomial restricted;  // contribution of p with p_i < p_{i+1}
};

// R_{n,j} restricted to p_i < p_{i+1} is exactly half of R_{n,j}.
// Requires 1 <= j <= m and 1 <= i <= n-2j-1.
InvarianceCheck verify_pair_invariance(int n, int j, int i, const TableOptions& options = {});

}  // namespace runpoly
