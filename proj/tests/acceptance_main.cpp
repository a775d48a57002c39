#include <cstdio>

#include "gradedlie/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : gradedlie::run_acceptance()) {
    std::printf("[%s] %d %s (%.2fs", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    if (r.budget_seconds) std::printf(" / %.0fs", *r.budget_seconds);
    std::printf("): %s\n", r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
