#include "qstates/specfun.hpp"

#include <numbers>

namespace qstates::specfun {

double kummer_truncated(int neg_n, double c, double x) {
  if (neg_n > 0) throw DomainError("kummer_truncated: upper parameter must be <= 0");
  const int n = -neg_n;
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < n; ++j) {
    if (c + j == 0.0)
      throw DomainError("kummer_truncated: Pochhammer (c)_j vanishes before truncation");
    term *= (neg_n + j) * x / ((c + j) * (j + 1.0));
    sum += term;
  }
  return sum;
}

Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw DomainError("spherical_harmonic: need |m| <= l");
  if (m < 0) {
    const Complex y = spherical_harmonic(l, -m, theta, phi);
    return ((-m) % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
  }
  const double log_norm = 0.5 * (std::log((2.0 * l + 1.0) / (4.0 * std::numbers::pi)) +
                                 log_factorial(l - m) - log_factorial(l + m));
  const double polar = std::exp(log_norm) * assoc_legendre(l, m, std::cos(theta));
  return std::polar(1.0, m * phi) * polar;
}

}  // namespace qstates::specfun
