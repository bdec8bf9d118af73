// Runs every verification group with the default thresholds and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any check fails.
#include <iostream>

#include "qstates/app/verify.hpp"

int main() {
  qstates::app::VerifyOptions options;
  const auto checks = qstates::app::run_checks(options);
  std::cout << qstates::app::format_report(checks);
  return qstates::app::all_passed(checks) ? 0 : 1;
}
