#include "qstates/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qstates/errors.hpp"

namespace qstates::quad {

namespace {

// Returns (P_n(z), P_n'(z)).
std::pair<double, double> legendre_with_derivative(std::size_t n, double z) {
  double p0 = 1.0;
  double p1 = z;
  if (n == 0) return {1.0, 0.0};
  for (std::size_t k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double p2 = ((2.0 * kk - 1.0) * z * p1 - (kk - 1.0) * p0) / kk;
    p0 = p1;
    p1 = p2;
  }
  const double dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
  return {p1, dp};
}

}  // namespace

Rule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw DomainError("gauss_legendre: n must be positive");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    if (n == 1) z = 0.0;
    for (int iter = 0; iter < 100 && n > 1; ++iter) {
      const auto [p, dp] = legendre_with_derivative(n, z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double dp = n == 1 ? 1.0 : legendre_with_derivative(n, z).second;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

double composite(const std::function<double(double)>& f, double a, double b,
                 std::size_t panels, std::size_t order) {
  const Rule ref = gauss_legendre(order);
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    double sum = 0.0;
    for (std::size_t i = 0; i < order; ++i)
      sum += ref.weights[i] * f(mid + 0.5 * width * ref.nodes[i]);
    total += 0.5 * width * sum;
  }
  return total;
}

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 3) return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);

  std::size_t last = n - 1;  // index of final node covered by plain Simpson
  double tail = 0.0;
  if ((n - 1) % 2 == 1) {
    last = n - 4;
    tail = 3.0 * h / 8.0 * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]);
  }
  double sum = f[0] + f[last];
  for (std::size_t i = 1; i < last; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  return h / 3.0 * sum + tail;
}

}  // namespace qstates::quad
