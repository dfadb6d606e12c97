#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "runpoly/distributions.hpp"
#include "runpoly/lattice_path.hpp"
#include "runpoly/phi.hpp"

namespace runpoly::cli {

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  std::string target;
  std::vector<Check> checks;
  nlohmann::ordered_json payload;  // target-specific extras, e.g. audit records
  bool passed() const;
};

struct VerifyParams {
  int n = 0;
  std::optional<int> k;
  std::optional<int> j;
  std::optional<int> i;
  std::optional<Restriction> restriction;
  TableOptions table;
  bool timing = true;
};

// Suite order used by `verify all`.
const std::vector<std::string>& verify_targets();

// Throws InvalidArgument for parameters the target cannot accept and
// GuardViolation when the work exceeds the limits.
VerifyReport run_verify(std::string_view target, const VerifyParams& params);

nlohmann::ordered_json audit_to_json(const AuditRecord& record, bool timing);

}  // namespace runpoly::cli
