// Acceptance suite: runs every top-level criterion and prints one pass/fail
// line per criterion. Exit code is the number of failing criteria.

#include <cstdio>

#include "torsor/selftest.hpp"

int main() {
  auto results = torsor::run_selftest();
  int failures = 0;
  int index = 0;
  for (const auto& r : results) {
    ++index;
    std::printf("%s  criterion %d: %s%s%s%s\n", r.pass ? "PASS" : "FAIL", index, r.name.c_str(),
                r.detail.empty() ? "" : "  [", r.detail.c_str(), r.detail.empty() ? "" : "]");
    if (!r.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures;
}
