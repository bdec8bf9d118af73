#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qstates/errors.hpp"
#include "qstates/quadrature.hpp"
#include "qstates/specfun.hpp"

using namespace qstates;
using namespace qstates::specfun;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

// Plain Ferrers functions (no (-1)^m phase) written out from Rodrigues' formula.
double ferrers_plain(int l, int m, double x) {
  const double s = std::sqrt(1 - x * x);
  if (l == 1 && m == 1) return s;
  if (l == 2 && m == 1) return 3 * x * s;
  if (l == 2 && m == 2) return 3 * (1 - x * x);
  if (l == 3 && m == 1) return 1.5 * (5 * x * x - 1) * s;
  if (l == 3 && m == 2) return 15 * x * (1 - x * x);
  if (l == 3 && m == 3) return 15 * s * s * s;
  return NAN;
}

// Explicit sum in extended precision; the alternating terms cancel badly
// in double for large x.
double laguerre_series(int n, double alpha, double x) {
  using L = long double;
  L sum = 0;
  for (int j = 0; j <= n; ++j) {
    const L binom = std::exp(std::lgamma(L(n) + alpha + 1) - std::lgamma(L(n - j) + 1) - std::lgamma(L(alpha) + j + 1));
    sum += (j % 2 ? -1 : 1) * binom * std::pow(L(x), j) / std::tgamma(L(j) + 1);
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("hermite: low orders") {
  CHECK(hermite(0, 0.7) == 1.0);
  CHECK(hermite(1, 1.0) == Approx(2.0));
  CHECK(hermite(2, 1.0) == Approx(2.0));
  for (double x : {-1.3, 0.0, 0.4, 2.2}) {
    CHECK(hermite(2, x) == Approx(4 * x * x - 2));
    CHECK(hermite(3, x) == Approx(8 * x * x * x - 12 * x));
  }
  CHECK_THROWS_AS(hermite(-1, 0.0), DomainError);
}

TEST_CASE("hermite: parity up to n = 20") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double x = dist(gen);
    for (int n = 0; n <= 20; ++n)
      CHECK(hermite(n, -x) == Approx((n % 2 ? -1.0 : 1.0) * hermite(n, x)).epsilon(1e-13));
  }
}

TEST_CASE("hermite: weighted orthogonality") {
  const auto rule = quad::gauss_legendre(200, -12.0, 12.0);
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      double sum = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        sum += rule.weights[i] * std::exp(-x * x) * hermite(m, x) * hermite(n, x);
      }
      const double norm = std::pow(2.0, n) * std::sqrt(pi) * factorial(n);
      if (m == n)
        CHECK(std::abs(sum - norm) / norm <= 1e-8);
      else
        CHECK(std::abs(sum) / norm <= 1e-8);
    }
}

TEST_CASE("hermite: confluent hypergeometric maps") {
  for (int n = 0; n <= 5; ++n)
    for (double x : {0.3, 1.0, 1.7}) {
      const double even = (n % 2 ? -1 : 1) * factorial(2 * n) / factorial(n) * kummer_truncated(-n, 0.5, x * x);
      CHECK(hermite(2 * n, x) == Approx(even).epsilon(1e-12));
      const double odd =
          (n % 2 ? -1 : 1) * 2 * factorial(2 * n + 1) / factorial(n) * x * kummer_truncated(-n, 1.5, x * x);
      CHECK(hermite(2 * n + 1, x) == Approx(odd).epsilon(1e-12));
    }
  CHECK(hermite(4, 1.0) == Approx(12.0 * kummer_truncated(-2, 0.5, 1.0)).epsilon(1e-12));
}

TEST_CASE("assoc_legendre: values and Condon-Shortley phase") {
  CHECK(assoc_legendre(0, 0, 0.3) == 1.0);
  CHECK(assoc_legendre(1, 0, 0.5) == Approx(0.5));
  CHECK(assoc_legendre(1, 1, 0.0) == Approx(-1.0));
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= l; ++m)
      for (double x : {-0.8, -0.2, 0.0, 0.45, 0.9})
        CHECK(assoc_legendre(l, m, x) == Approx((m % 2 ? -1.0 : 1.0) * ferrers_plain(l, m, x)).epsilon(1e-13));
  CHECK_THROWS_AS(assoc_legendre(2, 3, 0.1), DomainError);
  CHECK_THROWS_AS(assoc_legendre(2, 1, 1.5), DomainError);
  CHECK_THROWS_AS(assoc_legendre(2, -1, 0.1), DomainError);
}

TEST_CASE("laguerre: values against the explicit series") {
  CHECK(laguerre(0, 0.5, 2.0) == 1.0);
  CHECK(laguerre(1, 0.0, 1.0) == Approx(0.0));
  CHECK(laguerre(1, 0.5, 0.0) == Approx(1.5));
  for (int n = 0; n <= 10; ++n)
    for (double alpha : {-0.5, 0.0, 0.5, 2.5, 5.0})
      for (double x : {0.0, 0.7, 3.0, 9.0})
        CHECK(laguerre(n, alpha, x) == Approx(laguerre_series(n, alpha, x)).epsilon(1e-10).scale(1.0));
  CHECK_THROWS_AS(laguerre(2, 0.5, -1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), DomainError);
}

TEST_CASE("laguerre: generating function coefficients") {
  // Taylor coefficients of (1-t)^{-a-1} exp(-t x / (1-t)) on |t| = 0.3.
  constexpr int samples = 64;
  constexpr double rho = 0.3;
  for (double alpha : {0.0, 0.5, 1.5})
    for (double x : {0.4, 2.0}) {
      for (int n = 0; n <= 8; ++n) {
        std::complex<double> c = 0;
        for (int j = 0; j < samples; ++j) {
          const std::complex<double> t = std::polar(rho, 2 * pi * j / samples);
          const std::complex<double> g = std::pow(1.0 - t, -alpha - 1) * std::exp(-t * x / (1.0 - t));
          c += g * std::pow(t, -n);
        }
        c /= samples;
        CHECK(std::abs(c.real() - laguerre(n, alpha, x)) <= 1e-10);
        CHECK(std::abs(c.imag()) <= 1e-10);
      }
    }
}

TEST_CASE("kummer_truncated") {
  CHECK(kummer_truncated(0, 0.5, 3.0) == 1.0);
  CHECK(kummer_truncated(-1, 0.5, 1.0) == Approx(-1.0));
  CHECK(kummer_truncated(-2, 0.5, 1.0) == Approx(1.0 - 4.0 + 4.0 / 3.0));
  CHECK_THROWS_AS(kummer_truncated(-2, -1.0, 1.0), DomainError);
  CHECK_NOTHROW(kummer_truncated(-1, -1.0, 1.0));
  CHECK_THROWS_AS(kummer_truncated(1, 0.5, 1.0), DomainError);
}

TEST_CASE("spherical_harmonic: values and symmetries") {
  const auto y00 = spherical_harmonic(0, 0, 1.1, 2.2);
  CHECK(y00.real() == Approx(0.2820948).epsilon(1e-7));
  CHECK(y00.imag() == 0.0);
  const auto y10 = spherical_harmonic(1, 0, 0.0, 0.77);
  CHECK(y10.real() == Approx(std::sqrt(3 / (4 * pi))));
  CHECK(y10.imag() == Approx(0.0));
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) {
      const double ref = std::abs(spherical_harmonic(l, m, 0.9, 0.0));
      for (double phi : {0.5, 1.9, 4.0}) CHECK(std::abs(spherical_harmonic(l, m, 0.9, phi)) == Approx(ref));
      const auto plus = spherical_harmonic(l, std::abs(m), 0.9, 1.3);
      const auto minus = spherical_harmonic(l, -std::abs(m), 0.9, 1.3);
      const double sign = std::abs(m) % 2 ? -1.0 : 1.0;
      CHECK(std::abs(minus - sign * std::conj(plus)) <= 1e-14);
    }
  CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.1, 0.1), DomainError);
}

TEST_CASE("spherical_harmonic: orthonormal on a product Gauss grid") {
  const auto mu = quad::gauss_legendre(20, -1.0, 1.0);
  constexpr int nphi = 20;
  for (int l1 = 0; l1 <= 4; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 0; l2 <= 4; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          std::complex<double> sum = 0;
          for (std::size_t i = 0; i < mu.nodes.size(); ++i)
            for (int p = 0; p < nphi; ++p) {
              const double th = std::acos(mu.nodes[i]);
              const double ph = 2 * pi * p / nphi;
              sum += mu.weights[i] * (2 * pi / nphi) * std::conj(spherical_harmonic(l1, m1, th, ph)) *
                     spherical_harmonic(l2, m2, th, ph);
            }
          const double expect = (l1 == l2 && m1 == m2) ? 1.0 : 0.0;
          CHECK(std::abs(sum - expect) <= 1e-8);
        }
}

TEST_CASE("log_gamma_ratio") {
  CHECK(log_gamma_ratio(1.5, 1.5) == 0.0);
  CHECK(log_gamma_ratio(0.5, 1.0) == Approx(std::log(std::sqrt(pi))));
  CHECK(log_gamma_ratio(5.0, 3.0) == Approx(std::log(12.0)));
  CHECK(std::isfinite(log_gamma_ratio(300.0, 2.0)));
  CHECK_THROWS_AS(log_gamma_ratio(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(log_gamma_ratio(1.0, -2.0), DomainError);
}
