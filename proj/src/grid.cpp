#include "qstates/grid.hpp"

#include <cmath>
#include <string>

#include "qstates/errors.hpp"

namespace qstates {

GridSpec GridSpec::from_points(double start, double end, std::size_t points) {
  if (points < 2) throw GridError("grid needs at least 2 points");
  return GridSpec{start, end, (end - start) / static_cast<double>(points - 1)};
}

std::size_t GridSpec::size() const {
  return static_cast<std::size_t>(std::llround((end - start) / step)) + 1;
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> x(size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = at(i);
  return x;
}

void GridSpec::validate(double min_intervals) const {
  if (!(std::isfinite(start) && std::isfinite(end) && start < end))
    throw GridError("grid requires finite start < end");
  if (!(step > 0.0)) throw GridError("grid step must be positive");
  if ((end - start) / step < min_intervals - 1e-9)
    throw GridError("grid has fewer than " + std::to_string(min_intervals) +
                    " intervals");
}

bool same_grid(const GridSpec& a, const GridSpec& b) {
  return a.start == b.start && a.step == b.step && a.size() == b.size();
}

}  // namespace qstates
