// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion, followed by the checks that failed.
#include <cstdio>
#include <string>
#include <vector>

#include "heatwg/verify.hpp"

int main() {
  using namespace heatwg::verify;
  const Options opt;
  const std::vector<std::pair<int, std::string>> order{{1, "theorem"},     {2, "algebra"}, {3, "haar-limit"}, {4, "haar-values"},
                                                       {5, "so-correction"}, {6, "mc"},      {7, "spectral"}};
  int failed = 0;
  for (const auto& [k, suite] : order) {
    const SuiteReport r = run_suite(suite, opt);
    const bool ok = r.passed();
    failed += ok ? 0 : 1;
    std::printf("Criterion %d [%s] %s: %zu checks, %d failed, max deviation %.3g, %.1fs\n", k, ok ? "PASS" : "FAIL", suite.c_str(),
                r.checks.size(), r.failures(), r.max_deviation(), r.seconds);
    for (const auto& c : r.checks)
      if (!c.passed)
        std::printf("    failed: %s (deviation %.3g, tolerance %.3g)%s%s\n", c.name.c_str(), c.deviation, c.tolerance,
                    c.note.empty() ? "" : " ", c.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(order.size()) - failed, order.size());
  return failed == 0 ? 0 : 1;
}
