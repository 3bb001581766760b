#pragma once

// The acceptance grid: one entry per release criterion, exact values and
// tolerances pinned in code. The CLI `acceptance` subcommand and the
// dedicated acceptance binary both run this.

#include <string>
#include <vector>

#include <json.hpp>

namespace qturan::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // what was checked / first failure
  double seconds = 0.0;
};

std::vector<CriterionResult> run_all();

bool all_passed(const std::vector<CriterionResult>& results);

nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results);

}  // namespace qturan::acceptance
