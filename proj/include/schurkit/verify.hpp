#ifndef SCHURKIT_VERIFY_HPP
#define SCHURKIT_VERIFY_HPP

#include <string>
#include <vector>

namespace schurkit {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // parameter range covered, or the first failure
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  // Cap on n for every check; 0 keeps each criterion's own stated bound.
  int max_n = 0;
  // Depth of the pentagonal / Euler-product checks.
  int max_k = 40;
};

// Suites: caterpillar, qsym, cde, pentagonal, unimodal, all.
std::vector<std::string> verify_suites();
bool is_verify_suite(const std::string& name);
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace schurkit

#endif
