#ifndef TORSOR_SELFTEST_HPP
#define TORSOR_SELFTEST_HPP

#include <string>
#include <vector>

namespace torsor {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure diagnostics or a one-line summary
};

/// Runs the full invariant suite (the acceptance criteria) and reports one
/// result per criterion. Deterministic: all randomness is fixed-seed.
std::vector<CheckResult> run_selftest();

/// All supported lie-type labels with rank <= max_rank.
std::vector<std::string> supported_types(int max_rank);

}  // namespace torsor

#endif  // TORSOR_SELFTEST_HPP
