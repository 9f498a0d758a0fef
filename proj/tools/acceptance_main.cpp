// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "rpgeo/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : rpgeo::run_acceptance()) {
    std::printf("[%s] %2d %s: %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", rpgeo::kCriteria - failed, rpgeo::kCriteria);
  return failed == 0 ? 0 : 1;
}
