#pragma once

// The verification suite: every acceptance criterion as a group of named
// checks. Shared by `agscale verify` and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace agscale::cli {

struct CheckResult {
  std::string id;
  std::string expected;
  std::string got;
  std::string tol;
  bool pass = false;
  double seconds = 0.0;
};

struct Criterion {
  int number = 0;
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};

/// All criteria in order. Each `run` catches its own exceptions and reports
/// them as failed checks.
std::vector<Criterion> criteria();

/// "%.10g"
std::string short_number(double x);

}  // namespace agscale::cli
