#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qstates::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule on [a, b] (nodes by Newton iteration on the
/// Legendre recurrence).
Rule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

/// Composite Gauss–Legendre: `panels` equal panels of `order` nodes each.
double composite(const std::function<double(double)>& f, double a, double b,
                 std::size_t panels, std::size_t order = 16);

/// Composite Simpson on uniformly spaced samples. An even sample count is
/// handled by closing the last three intervals with the 3/8 rule.
double simpson(std::span<const double> f, double h);

}  // namespace qstates::quad
