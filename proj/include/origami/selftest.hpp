#pragma once

#include <string>
#include <vector>

// The acceptance corpus: ten numbered criteria covering the closed-form
// tables, the exact rank oracle, the structural theorems, the homology
// geometry, the label action, the random-product structure, and two injected
// negative controls. Each criterion reports one line.
namespace origami::selftest {

struct Options {
  bool quick = false;  // skip the random-product criterion
  bool slow = false;   // include the n = 6 symmetric family in criterion 3
  int threads = 1;     // worker bound for random-product replicas
  // Negative-control injections (used by criterion 10 internally; exposed so
  // the command line can demonstrate a failing run end to end).
  bool inject_wrong_l = false;
  bool inject_broken_form = false;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> run_all(const Options& opt);

// Skips do not count against success.
bool all_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& r);

}  // namespace origami::selftest
