#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string>

#include "qstates/errors.hpp"

namespace qstates::specfun {

using Complex = std::complex<double>;

/// Physicists' Hermite polynomial H_n(x), by the three-term recurrence
/// H_{k+1} = 2x H_k - 2k H_{k-1}.
template <std::floating_point T>
T hermite(int n, T x) {
  if (n < 0) throw DomainError("hermite: negative degree");
  if (n == 0) return T(1);
  T prev = 1;
  T cur = 2 * x;
  for (int k = 1; k < n; ++k) {
    const T next = 2 * x * cur - 2 * T(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Associated Legendre function P_l^m(x) for 0 <= m <= l, |x| <= 1,
/// including the Condon–Shortley factor (-1)^m.
template <std::floating_point T>
T assoc_legendre(int l, int m, T x) {
  if (l < 0 || m < 0 || m > l)
    throw DomainError("assoc_legendre: need 0 <= m <= l, got l=" + std::to_string(l) +
                      " m=" + std::to_string(m));
  if (!(std::abs(x) <= T(1))) throw DomainError("assoc_legendre: |x| > 1");

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  T pmm = 1;
  if (m > 0) {
    const T root = std::sqrt((1 - x) * (1 + x));
    T odd = 1;
    for (int i = 1; i <= m; ++i) {
      pmm *= -odd * root;
      odd += 2;
    }
  }
  if (l == m) return pmm;

  T pm1 = x * T(2 * m + 1) * pmm;
  if (l == m + 1) return pm1;

  T pll = 0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * T(2 * ll - 1) * pm1 - T(ll + m - 1) * pmm) / T(ll - m);
    pmm = pm1;
    pm1 = pll;
  }
  return pll;
}

/// Generalized Laguerre polynomial in the modern series convention
///   L_n^a(x) = sum_{j=0}^{n} (-1)^j C(n+a, n-j) x^j / j!
/// so that L_1^a(x) = 1 + a - x. Requires a > -1 and x >= 0.
template <std::floating_point T>
T laguerre(int n, T alpha, T x) {
  if (n < 0) throw DomainError("laguerre: negative degree");
  if (!(alpha > T(-1))) throw DomainError("laguerre: alpha must exceed -1");
  if (x < 0) throw DomainError("laguerre: x must be nonnegative");
  if (n == 0) return T(1);
  T prev = 1;
  T cur = 1 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const T next = ((T(2 * k + 1) + alpha - x) * cur - (T(k) + alpha) * prev) / T(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Polynomial branch of Kummer's 1F1(-n; c; x) = sum_{j<=n} (-n)_j x^j / ((c)_j j!).
/// `neg_n` is the nonpositive upper parameter a = -n.
double kummer_truncated(int neg_n, double c, double x);

/// Orthonormal spherical harmonic Y_l^m(theta, phi) with the Condon–Shortley
/// phase. Negative m uses Y_l^{-m} = (-1)^m conj(Y_l^m).
Complex spherical_harmonic(int l, int m, double theta, double phi);

/// ln Gamma(a) - ln Gamma(b) for a, b > 0.
template <std::floating_point T>
T log_gamma_ratio(T a, T b) {
  if (!(a > 0) || !(b > 0)) throw DomainError("log_gamma_ratio: arguments must be positive");
  return std::lgamma(a) - std::lgamma(b);
}

/// ln n! for n >= 0.
template <std::floating_point T = double>
T log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  return std::lgamma(T(n) + 1);
}

}  // namespace qstates::specfun
