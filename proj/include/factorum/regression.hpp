#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "factorum/core.hpp"

namespace factorum {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
  // False when a search behind the computed value was truncated.
  bool certified = true;
};

enum class CaseStatus { Pass, Fail, Incomplete };

const char* to_string(CaseStatus s);

struct CaseResult {
  int number = 0;
  std::string id;
  std::string title;
  std::vector<Check> checks;
  CaseStatus status = CaseStatus::Pass;
  double seconds = 0;
};

struct CaseInfo {
  int number;
  std::string id;
  std::string title;
};

struct RegressionOptions {
  // Overrides the per-case word-length budget (budget-starved runs).
  std::optional<int> budget_len;
  std::optional<std::size_t> budget_ball;
  unsigned seed = 20240607;
};

const std::vector<CaseInfo>& regression_cases();
// Accepts a case id or its number.
CaseResult run_case(const std::string& which, const RegressionOptions& opts = {});
// Fail when some certified check fails, Incomplete when only uncertified
// checks fail or the computation was truncated.
CaseStatus summarize(const std::vector<Check>& checks);

}  // namespace factorum
