#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hyperoct/bigint.hpp"

namespace hyperoct {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suites: "main", "bijection", "orientable", "characters", "all". Each
/// suite runs its checks for every size 1..n. Progress goes to `progress`
/// when it is not null. Throws std::invalid_argument on an unknown suite.
std::vector<CheckResult> runSuite(const std::string& suite, int n,
                                  std::ostream* progress = nullptr);

bool allPassed(const std::vector<CheckResult>& results);
/// "PASS  name  detail" / "FAIL  name  detail"
std::string formatResult(const CheckResult& result);

/// (2n-1)!!
BigInt doubleFactorialOdd(int n);

}  // namespace hyperoct
