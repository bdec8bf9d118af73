#pragma once

#include <cstddef>
#include <vector>

namespace qstates {

/// Uniform grid on [start, end] with spacing `step`.
///
/// The node count is derived so that the last node coincides with `end`
/// to within rounding; construct through `from_points` when the caller
/// thinks in node counts rather than spacing.
struct GridSpec {
  double start = 0.0;
  double end = 1.0;
  double step = 1e-2;

  static GridSpec from_points(double start, double end, std::size_t points);

  std::size_t size() const;
  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  std::vector<double> nodes() const;

  /// Throws GridError unless start < end, step > 0 and there are at least
  /// `min_intervals` intervals.
  void validate(double min_intervals = 100.0) const;

  GridSpec refined() const { return GridSpec{start, end, step / 2.0}; }
};

bool same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace qstates
