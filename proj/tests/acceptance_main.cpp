// Runs the acceptance grid and prints one pass/fail line per criterion.
// Exit code 0 when everything passes, 4 otherwise (matching the CLI).

#include <cstdio>

#include "qturan/acceptance.hpp"

int main() {
  const auto results = qturan::acceptance::run_all();
  for (const auto& r : results)
    std::printf("[%s] criterion %2d: %-36s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
  const bool ok = qturan::acceptance::all_passed(results);
  std::printf("%s\n", ok ? "acceptance: ALL CRITERIA PASSED" : "acceptance: FAILURES PRESENT");
  return ok ? 0 : 4;
}
