#pragma once

#include <optional>
#include <string>
#include <vector>

namespace erfpoly {

struct CheckResult {
  std::string name;
  double measured;
  double tolerance;
  bool passed;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

enum class Suite { kPoly, kSpecial, kAsymp, kRay, kOracle, kAll };

std::optional<Suite> parse_suite(const std::string& name);

SuiteReport verify_poly();
SuiteReport verify_special();
SuiteReport verify_asymp();
SuiteReport verify_ray();
SuiteReport verify_oracle();

std::vector<SuiteReport> run_suite(Suite suite);

// One line per check: PASS/FAIL, name, measured value and tolerance.
std::string format_report(const std::vector<SuiteReport>& reports);

}  // namespace erfpoly
