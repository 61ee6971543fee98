#pragma once

#include <optional>
#include <string>
#include <vector>

namespace msc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string subject; // "S4A4", "A2n-1^2 n=3", "global"
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Every fixture and invariant that applies to one pair; k <= K for the oracle comparison.
VerifyReport verify_pair(const std::string& name, std::optional<int> n = std::nullopt, unsigned K = 12);
/// Pair-independent checks: character tables, numeric tables, Chebyshev identities, exponent table.
VerifyReport verify_global();
/// verify_global, then every pair with n from the family minimum to max_n, in a fixed order.
std::vector<VerifyReport> verify_all(int max_n = 8);

} // namespace msc
