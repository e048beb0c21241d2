#pragma once

#include <functional>
#include <string>
#include <vector>

namespace sl12 {

/// Size caps for the verification battery. The defaults reproduce the full
/// published grid; smaller values shrink every sweep they bound.
struct VerifyBounds {
  long max_n = 5;         // largest partition weight in the fused-module grid
  long max_lambda2 = 6;   // largest second weight coordinate anywhere
  long max_comb_n = 8;    // largest partition weight in the counting identities
  bool extended = false;  // adds the 1024-dimensional Weyl realization
};

struct CriterionResult {
  std::string name;
  std::string suite;    // filled by the suite runner
  std::string summary;  // what was swept and compared
  bool pass = false;
  long cases = 0;       // elementary equalities checked
  std::string detail;   // first failing case, empty when clean
};

struct Criterion {
  std::string name;   // e.g. "cv-modules"
  std::string suite;  // e.g. "cv"
  std::function<CriterionResult(const VerifyBounds&)> run;
};

/// The full battery, in a fixed order.
const std::vector<Criterion>& all_criteria();

/// Suite names in first-appearance order, without duplicates.
std::vector<std::string> suite_names();

/// Runs every criterion of the named suite; "all" runs the whole battery.
/// Throws std::invalid_argument for an unknown name.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyBounds& bounds);

}  // namespace sl12
