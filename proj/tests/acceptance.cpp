// One line per acceptance criterion, followed by the measured values.
// Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "semint/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : semint::run_suite("all")) {
    std::printf("criterion %2d %s %-28s %8.2fs\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
