// Acceptance suite: runs every verification check at its full stated bound
// and prints one pass/fail line per criterion.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "schurkit/verify.hpp"

int main() {
  schurkit::VerifyOptions opts;
  opts.max_n = 0;  // each criterion's own stated bound
  opts.max_k = 40;

  // Display order of the criteria.
  const std::vector<std::string> order = {
      "caterpillar-count",         // 1
      "caterpillar-main-theorem",  // 2
      "caterpillar-descent-fibers",// 3
      "caterpillar-phi",           // 4
      "caterpillar-linearity",     // 5
      "hurwitz-count",             // 6
      "involutions",               // 7
      "inverse-descent-classes",   // 8
      "pentagonal-criterion",      // 9
      "inv-imaj-equidistribution", // 10
      "gannon-formula",            // 11
      "uroot-prime-power",         // 12
      "span-structure",            // 13
      "unique-j",                  // 14
  };

  // Stated wall-time budgets, in milliseconds.
  const std::map<std::string, double> budget = {
      {"caterpillar-count", 1000.0},
      {"caterpillar-main-theorem", 10000.0},
      {"gannon-formula", 30000.0},
  };

  std::map<std::string, schurkit::CheckResult> by_name;
  for (const schurkit::CheckResult& r : schurkit::run_verify_suite("all", opts))
    by_name[r.name] = r;

  int failures = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto it = by_name.find(order[i]);
    if (it == by_name.end()) {
      std::printf("[FAIL] %2zu. %-27s missing check\n", i + 1, order[i].c_str());
      ++failures;
      continue;
    }
    const schurkit::CheckResult& r = it->second;
    bool pass = r.pass;
    std::string detail = r.detail;
    if (const auto b = budget.find(r.name); b != budget.end() && r.elapsed_ms > b->second) {
      pass = false;
      detail += " [over time budget]";
    }
    if (!pass) ++failures;
    std::printf("[%s] %2zu. %-27s %s (%.0f ms)\n", pass ? "PASS" : "FAIL", i + 1,
                r.name.c_str(), detail.c_str(), r.elapsed_ms);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %zu criteria passed\n", order.size());
  return failures == 0 ? 0 : 1;
}
