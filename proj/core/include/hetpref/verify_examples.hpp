#pragma once

#include <string>
#include <vector>

namespace hetpref {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Built-in counterexample scenarios with hard-coded inputs and expected
// outcomes: majority tyranny, irrelevant-alternative flips, sampling
// sensitivity, temperature sensitivity, mediocrity promotion, and the
// mixture cycle test. Two-decimal score targets are checked to +-0.005;
// ordering claims are checked as signs.
std::vector<CheckResult> verify_examples();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hetpref
