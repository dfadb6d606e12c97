#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "runpoly/errors.hpp"
#include "runpoly/permutation.hpp"
#include "runpoly/polynomial.hpp"

namespace runpoly::cli {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> order{
      "divisibility", "lemma-difficult", "trivi",         "bijection",
      "dp-oracle",    "invariance",      "log-concavity", "phi-audit"};
  return order;
}

nlohmann::ordered_json audit_to_json(const AuditRecord& r, bool timing) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["restriction"] = std::string(to_string(r.restriction));
  j["domain_pairs"] = std::to_string(r.domain_pairs);
  j["defined"] = std::to_string(r.defined);
  j["undefined"] = std::to_string(r.undefined);
  j["injective"] = r.injective;
  j["target_intersecting_pairs"] = std::to_string(r.target_intersecting_pairs);
  j["image_size"] = std::to_string(r.image_size);
  j["intersecting_nonimage"] = std::to_string(r.intersecting_nonimage);
  j["source_lower"] = std::to_string(r.source_lower);
  j["source_upper"] = std::to_string(r.source_upper);
  j["target"] = std::to_string(r.target);
  j["image_intersects"] = r.image_intersects;
  j["closure"] = r.closure;
  j["deficit_dominated"] = r.deficit_dominated;
  j["log_concave_inequality"] = r.log_concave_inequality;
  j["shared_next_edge_cases"] = std::to_string(r.shared_next_edge_cases);
  j["crossing_cases"] = std::to_string(r.crossing_cases);
  j["crossing_disagreements"] = std::to_string(r.crossing_disagreements);
  j["passed"] = r.passed();
  if (timing) j["elapsed_ms"] = static_cast<long long>(r.elapsed_seconds * 1000.0);
  return j;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

std::string factorial_str(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f.str();
}

Check check(std::string name, bool passed, std::string detail) {
  return Check{std::move(name), passed, false, std::move(detail)};
}

void divisibility(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 4, "divisibility needs n >= 4");
  const IntPolynomial runs = run_distribution(p.n, p.table).polynomial();
  const BigInt at_minus_one = evaluate(runs, -1);
  report.checks.push_back(check("R_n(-1) = 0", at_minus_one == 0, "R_n(-1) = " + at_minus_one.str()));
  const BigInt at_one = evaluate(runs, 1);
  report.checks.push_back(check("R_n(1) = n!", at_one.str() == factorial_str(p.n),
                                "R_n(1) = " + at_one.str()));
  const bool even = std::all_of(runs.coefficients().begin(), runs.coefficients().end(),
                                [](const BigInt& c) { return c % 2 == 0; });
  report.checks.push_back(check("coefficients even", even, runs.str()));

  const int m = max_half_ascending_index(p.n);
  try {
    const IntPolynomial q = divide_exact_x_plus_1(runs.shifted_down(1), static_cast<std::size_t>(m));
    report.checks.push_back(check("(x+1)^" + std::to_string(m) + " divides R_n/x", true, q.str()));
    report.checks.push_back(check("quotient nonnegative", has_nonnegative_coefficients(q), q.str()));
  } catch (const NotDivisible& e) {
    report.checks.push_back(check("(x+1)^" + std::to_string(m) + " divides R_n/x", false, e.what()));
  }
}

void quotient_tables(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 4, "lemma-difficult needs n >= 4");
  const int m = max_half_ascending_index(p.n);
  const IntPolynomial runs = run_distribution(p.n, p.table).polynomial();
  std::vector<int> js;
  if (p.j) {
    require(*p.j >= 1 && *p.j <= m, "j outside 1.." + std::to_string(m));
    js.push_back(*p.j);
  } else {
    for (int j = 1; j <= m; ++j) js.push_back(j);
  }
  for (int j : js) {
    const std::string name = "R_n/(x+1)^" + std::to_string(j) + " = R_{n," + std::to_string(j) + "}";
    const IntPolynomial enumerated = t_distribution(p.n, j, p.table).polynomial();
    try {
      const IntPolynomial q = divide_exact_x_plus_1(runs, static_cast<std::size_t>(j));
      report.checks.push_back(check(name, q == enumerated,
                                    "quotient " + q.str() + "; enumerated " + enumerated.str()));
    } catch (const NotDivisible& e) {
      report.checks.push_back(check(name, false, e.what()));
    }
  }
  const FactorizationResult f = factorize_runs_polynomial(p.n, p.table);
  report.checks.push_back(check("R_n = x (x+1)^m T", f.verified,
                                f.verified ? "T = " + f.t_polynomial.str() : f.failure));
}

void odd_runs_identity(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 4 && p.n % 2 == 0, "trivi needs even n >= 4");
  require_table_n(p.n, p.table.limits);
  std::uint64_t checked = 0;
  std::optional<std::string> counterexample;
  std::map<int, BigInt> by_runs;
  PermutationStream stream(p.n, [](const Permutation& q) { return is_fully_half_ascending(q); },
                           p.table.limits);
  while (auto q = stream.next()) {
    ++checked;
    const int r = run_count(*q);
    const int d = descent_count(*q);
    if (r != 2 * d + 1 && !counterexample) {
      counterexample = q->str() + " has " + std::to_string(r) + " runs and " +
                       std::to_string(d) + " descents";
    }
    by_runs[r] += 1;
  }
  report.checks.push_back(check("runs = 2 des + 1", !counterexample,
                                counterexample.value_or(std::to_string(checked) +
                                                        " half-ascending permutations")));

  const DistributionTable u = half_ascending_descent_distribution(p.n, p.table);
  bool table_ok = true;
  for (const auto& [k, c] : u.counts()) table_ok &= by_runs[2 * k + 1] == c;
  BigInt projected = 0;
  for (const auto& [r, c] : by_runs) projected += c;
  table_ok &= projected == u.total();
  report.checks.push_back(check("#{2k+1 runs} = U(n,k)", table_ok, u.polynomial().str()));

  bool paths_ok = true;
  std::string detail;
  for (int k = 0; k < p.n; ++k) {
    const auto v = static_cast<long long>(enumerate_paths(p.n, k, Restriction::v, p.table.limits).size());
    if (BigInt(v) != u.count(k)) {
      paths_ok = false;
      detail = "|V(n," + std::to_string(k) + ")| = " + std::to_string(v) + " but U = " + u.count(k).str();
      break;
    }
  }
  report.checks.push_back(check("|V(n,k)| = U(n,k)", paths_ok, paths_ok ? "all k" : detail));
}

void bijection(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 1, "bijection needs n >= 1");
  std::uint64_t count = 0;
  std::optional<std::string> failure;
  std::map<int, std::uint64_t> by_verticals;
  PermutationStream stream(p.n, {}, p.table.limits);
  while (auto q = stream.next()) {
    ++count;
    const LabeledPath path = perm_to_path(*q);
    by_verticals[path.vertical_count()] += 1;
    if (failure) continue;
    if (auto v = validate(path)) {
      failure = q->str() + " maps to invalid " + path.str() + ": " + describe(*v);
    } else if (path_to_perm(path) != *q) {
      failure = q->str() + " -> " + path.str() + " -> " + path_to_perm(path).str();
    } else {
      const auto descents = descent_positions(*q);
      for (int i = 2; i <= path.size(); ++i) {
        const bool vertical = path.edge(i).dir == Direction::vertical;
        const bool descent = std::find(descents.begin(), descents.end(), i - 1) != descents.end();
        if (vertical != descent) {
          failure = q->str() + ": edge " + std::to_string(i) + " direction disagrees with position " +
                    std::to_string(i - 1);
          break;
        }
      }
    }
  }
  report.checks.push_back(check("roundtrip", !failure,
                                failure.value_or(std::to_string(count) + " roundtrips")));

  const DistributionTable a = descent_distribution(p.n, p.table);
  bool sizes_ok = true;
  std::string detail = "all k";
  for (int k = 0; k < p.n; ++k) {
    const auto paths = enumerate_paths(p.n, k, Restriction::all, p.table.limits);
    for (const auto& path : paths) {
      if (perm_to_path(path_to_perm(path)) != path) {
        sizes_ok = false;
        detail = "path " + path.str() + " does not roundtrip";
        break;
      }
    }
    if (sizes_ok && BigInt(paths.size()) != a.count(k)) {
      sizes_ok = false;
      detail = "|P(n," + std::to_string(k) + ")| = " + std::to_string(paths.size()) +
               " but A(n,k) = " + a.count(k).str();
    }
    if (!sizes_ok) break;
  }
  report.checks.push_back(check("|P(n,k)| = A(n,k)", sizes_ok, detail));
}

void dp_oracle(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 1, "dp-oracle needs n >= 1");
  std::vector<Restriction> restrictions{Restriction::all, Restriction::v, Restriction::vprime};
  if (p.restriction) restrictions = {*p.restriction};
  for (auto r : restrictions) {
    bool ok = true;
    std::string detail;
    for (int k = 0; k < p.n; ++k) {
      if (p.k && *p.k != k) continue;
      const auto enumerated = enumerate_paths(p.n, k, r, p.table.limits).size();
      const BigInt dp = count_paths_dp(p.n, k, r);
      if (dp != BigInt(enumerated)) {
        ok = false;
        detail = "k = " + std::to_string(k) + ": dp " + dp.str() + " vs enumerated " +
                 std::to_string(enumerated);
        break;
      }
      if (!detail.empty()) detail += ' ';
      detail += dp.str();
    }
    report.checks.push_back(check("dp = enumeration (" + std::string(to_string(r)) + ")", ok, detail));
  }
}

void invariance(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 4, "invariance needs n >= 4");
  const int m = max_half_ascending_index(p.n);
  if (p.j) require(*p.j >= 1 && *p.j <= m, "j outside 1.." + std::to_string(m));
  for (int j = 1; j <= m; ++j) {
    if (p.j && *p.j != j) continue;
    for (int i = 1; i <= p.n - 2 * j - 1; ++i) {
      if (p.i && *p.i != i) continue;
      const InvarianceCheck c = verify_pair_invariance(p.n, j, i, p.table);
      report.checks.push_back(check("j=" + std::to_string(j) + " i=" + std::to_string(i), c.holds,
                                    "restricted " + c.restricted.str() + "; full " + c.full.str()));
    }
  }
  if (p.i) {
    require(!report.checks.empty(), "no (j, i) pair matches the requested i");
  }
}

void log_concavity_of(const std::string& name, const DistributionTable& table, VerifyReport& report) {
  const IntPolynomial poly = table.polynomial();
  const auto lc = is_log_concave(poly);
  const auto um = is_unimodal(poly);
  std::string detail = poly.str();
  if (!lc) detail += "; violation at k = " + std::to_string(*lc.first_violation);
  report.checks.push_back(check(name + " log-concave", lc.log_concave, detail));
  report.checks.push_back(check(name + " contiguous support", table.has_contiguous_support(), detail));
  report.checks.push_back(check(name + " unimodal", um.unimodal,
                                um.peak ? "peak at k = " + std::to_string(*um.peak) : detail));
}

void log_concavity(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 2, "log-concavity needs n >= 2");
  log_concavity_of("R(n,.)", run_distribution(p.n, p.table), report);
  log_concavity_of("A(n,.)", descent_distribution(p.n, p.table), report);
  if (p.n >= 4 && p.n % 2 == 0) {
    log_concavity_of("U(n,.)", half_ascending_descent_distribution(p.n, p.table), report);
  } else if (p.n >= 5) {
    log_concavity_of("odd-T(n,.)", odd_t_distribution(p.n, p.table), report);
  }
}

void phi_audit(const VerifyParams& p, VerifyReport& report) {
  require(p.n >= 3, "phi-audit needs n >= 3");
  if (p.k) require(*p.k >= 1 && *p.k <= p.n - 2, "k outside 1.." + std::to_string(p.n - 2));
  std::vector<Restriction> restrictions{Restriction::all, Restriction::v, Restriction::vprime};
  if (p.restriction) restrictions = {*p.restriction};
  report.payload["audits"] = nlohmann::ordered_json::array();
  for (auto r : restrictions) {
    for (int k = 1; k <= p.n - 2; ++k) {
      if (p.k && *p.k != k) continue;
      const AuditRecord record = audit_quasi_injection(p.n, k, r, {p.table.limits});
      report.payload["audits"].push_back(audit_to_json(record, p.timing));
      report.checks.push_back(
          check("k=" + std::to_string(k) + " " + std::string(to_string(r)), record.passed(),
                "domain " + std::to_string(record.domain_pairs) + ", undefined " +
                    std::to_string(record.undefined) + " <= nonimage " +
                    std::to_string(record.intersecting_nonimage) +
                    (record.injective ? ", injective" : ", NOT injective")));
    }
  }
}

bool applicable(std::string_view target, int n) {
  if (target == "divisibility" || target == "lemma-difficult" || target == "invariance") return n >= 4;
  if (target == "trivi") return n >= 4 && n % 2 == 0;
  if (target == "log-concavity") return n >= 2;
  if (target == "phi-audit") return n >= 3;
  return n >= 1;
}

using Runner = std::function<void(const VerifyParams&, VerifyReport&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table{
      {"divisibility", divisibility}, {"lemma-difficult", quotient_tables},
      {"trivi", odd_runs_identity},               {"bijection", bijection},
      {"dp-oracle", dp_oracle},       {"invariance", invariance},
      {"log-concavity", log_concavity}, {"phi-audit", phi_audit}};
  return table;
}

}  // namespace

VerifyReport run_verify(std::string_view target, const VerifyParams& params) {
  VerifyReport report;
  report.target = std::string(target);
  if (target == "all") {
    report.payload["suite"] = nlohmann::ordered_json::array();
    for (const auto& name : verify_targets()) {
      if (!applicable(name, params.n)) {
        report.checks.push_back(Check{name, true, true, "not applicable for n = " + std::to_string(params.n)});
        continue;
      }
      VerifyReport part = run_verify(name, params);
      for (auto& c : part.checks) {
        c.name = name + ": " + c.name;
        report.checks.push_back(std::move(c));
      }
      if (!part.payload.empty()) report.payload["suite"].push_back({{"target", name}, {"payload", part.payload}});
      if (!part.passed()) break;
    }
    return report;
  }
  const auto& table = runners();
  const auto it = table.find(target);
  if (it == table.end()) throw InvalidArgument("unknown verify target '" + std::string(target) + "'");
  it->second(params, report);
  return report;
}

}  // namespace runpoly::cli
