#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qstates/bic.hpp"
#include "qstates/grid.hpp"
#include "qstates/wells.hpp"

namespace qstates::app {

enum class Command { eigenstate, spectrum, bic, oldquantum, verify };

enum class Units { natural, rydberg, ev };

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadArguments = 2,
  kIoError = 3,
  kNoConvergence = 4,
  kResidualFailed = 5,
};

/// Thrown for malformed or out-of-range options; maps to kBadArguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridArg {
  double start = 0.0;
  double end = 1.0;
  std::size_t points = 2;
  GridSpec spec() const { return GridSpec::from_points(start, end, points); }
};

struct RunConfig {
  Command command = Command::verify;
  wells::Family family = wells::Family::box;
  bic::Scheme scheme = bic::Scheme::stillinger_herrick;
  int n = 1;
  int l = 0;
  int m = 0;
  double k = 1.0;
  double lambda = 1.0;
  double width = 1.0;
  double omega = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  int count = 5;
  std::optional<double> delta_e_eV;
  std::optional<GridArg> grid;
  std::optional<Units> units;  // per-family default when unset
  std::string out;             // empty: stdout
  std::vector<std::pair<std::string, double>> tolerances;
  std::vector<std::string> only;
  int threads = 1;
};

/// "start:end:points", all three fields required, points >= 2, start < end.
/// Anything else (spaces, trailing text, hex, inf/nan) is rejected.
GridArg parse_grid(std::string_view text);

/// "key=value" with a finite positive value.
std::pair<std::string, double> parse_tolerance(std::string_view text);

Units parse_units(std::string_view name);
std::string_view units_name(Units u);

/// Hydrogen defaults to Rydberg units, everything else to natural units.
Units effective_units(const RunConfig& config);

}  // namespace qstates::app
