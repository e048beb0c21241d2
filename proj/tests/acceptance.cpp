// Runs the full verification battery and prints one PASS/FAIL line per
// criterion. Exit code 0 when everything passes, 1 otherwise.
//
//   --quick     shrink every grid (smoke runs; not the reference configuration)
//   --extended  add the 1024-dimensional Weyl realization to the sweep

#include <chrono>
#include <cstdio>
#include <string>

#include "sl12/verify.hpp"

int main(int argc, char** argv) {
  sl12::VerifyBounds bounds;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--extended") {
      bounds.extended = true;
    } else if (arg == "--quick") {
      bounds.max_n = 3;
      bounds.max_lambda2 = 3;
      bounds.max_comb_n = 6;
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--extended]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0;
  long total_cases = 0;
  double total_secs = 0.0;
  for (const sl12::Criterion& c : sl12::all_criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    const sl12::CriterionResult r = c.run(bounds);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total_cases += r.cases;
    total_secs += dt;
    std::printf("%s  %-22s %6ld checks  %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.cases, dt, r.summary.c_str());
    if (!r.pass) {
      ++failed;
      std::printf("      first failure: %s\n", r.detail.c_str());
    }
    std::fflush(stdout);
  }
  const int n = static_cast<int>(sl12::all_criteria().size());
  std::printf("%s  %d/%d criteria, %ld checks, %.1fs\n", failed == 0 ? "PASS" : "FAIL", n - failed,
              n, total_cases, total_secs);
  return failed == 0 ? 0 : 1;
}
