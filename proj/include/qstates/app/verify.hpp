#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qstates::app {

/// Named acceptance thresholds, overridable from the command line.
class Tolerances {
 public:
  Tolerances();
  double get(std::string_view key) const;
  void set(std::string_view key, double value);  // UsageError for unknown keys
  const std::map<std::string, double, std::less<>>& all() const { return values_; }

 private:
  std::map<std::string, double, std::less<>> values_;
};

struct Check {
  std::string group;
  std::string name;
  double measured = 0.0;
  double limit = 0.0;
  bool at_least = false;  // pass iff measured >= limit, else measured <= limit
  bool pass = false;
};

struct VerifyOptions {
  Tolerances tolerances;
  std::vector<std::string> only;  // empty: every group
  int threads = 4;                // used by the thread-count determinism check
};

/// Group names in report order.
const std::vector<std::string>& verify_groups();

std::vector<Check> run_checks(const VerifyOptions& options);

/// One "PASS|FAIL group name measured=... limit=..." line per check plus a
/// summary line.
std::string format_report(const std::vector<Check>& checks);

bool all_passed(const std::vector<Check>& checks);

}  // namespace qstates::app
