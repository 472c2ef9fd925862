// One PASS/FAIL line per acceptance criterion, followed by the individual checks.
// Exit status is 1 when any criterion fails.

#include <chrono>
#include <cstdio>

#include <agscale_cli/checks.hpp>

int main() {
  using agscale::cli::CheckResult;
  int failed = 0;
  const auto all = agscale::cli::criteria();
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = !results.empty();
    for (const CheckResult& r : results) pass = pass && r.pass;
    if (!pass) ++failed;
    std::printf("criterion %02d %-28s %s  (%.2f s)\n", c.number, c.name.c_str(), pass ? "PASS" : "FAIL",
                secs);
    for (const CheckResult& r : results) {
      std::printf("    %-22s expected %-26s got %-22s tol %-12s %s\n", r.id.c_str(), r.expected.c_str(),
                  r.got.c_str(), r.tol.c_str(), r.pass ? "ok" : "FAIL");
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
