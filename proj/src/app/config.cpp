#include "qstates/app/config.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace qstates::app {

namespace {

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (text.empty() || text.front() == '+') throw UsageError(std::string(what) + ": empty or malformed number");
  const auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw UsageError(std::string(what) + ": cannot parse '" + std::string(text) + "'");
  return v;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw UsageError(std::string(what) + ": cannot parse '" + std::string(text) + "'");
  return v;
}

}  // namespace

GridArg parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw UsageError("--grid expects start:end:points");
  GridArg g;
  g.start = parse_real(text.substr(0, c1), "--grid start");
  g.end = parse_real(text.substr(c1 + 1, c2 - c1 - 1), "--grid end");
  g.points = parse_count(text.substr(c2 + 1), "--grid points");
  if (g.points < 2) throw UsageError("--grid needs at least 2 points");
  if (!(g.start < g.end)) throw UsageError("--grid needs start < end");
  return g;
}

std::pair<std::string, double> parse_tolerance(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw UsageError("--tolerance expects key=value");
  const double v = parse_real(text.substr(eq + 1), "--tolerance value");
  if (!(v > 0.0)) throw UsageError("--tolerance value must be positive");
  return {std::string(text.substr(0, eq)), v};
}

Units parse_units(std::string_view name) {
  if (name == "natural") return Units::natural;
  if (name == "rydberg") return Units::rydberg;
  if (name == "ev" || name == "eV" || name == "ev-angstrom") return Units::ev;
  throw UsageError("unknown unit system '" + std::string(name) + "'");
}

std::string_view units_name(Units u) {
  switch (u) {
    case Units::natural: return "natural";
    case Units::rydberg: return "rydberg";
    case Units::ev: return "ev";
  }
  return "?";
}

Units effective_units(const RunConfig& config) {
  if (config.units) return *config.units;
  if (config.command != Command::bic && config.family == wells::Family::hydrogen) return Units::rydberg;
  return Units::natural;
}

}  // namespace qstates::app
