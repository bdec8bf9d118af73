#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <string_view>
#include <vector>

#include "qstates/errors.hpp"
#include "qstates/grid.hpp"

namespace qstates::bic {

// Bound states embedded in the continuum, hbar = m = 1. Every construction
// modulates the free s-wave sinc(kr) by f(r) = 1/(lambda + s(r)) with
// s' >= 0 vanishing at the zeros of sin(kr), which keeps V free of poles
// and leaves the eigenvalue at E0 = k^2/2.

enum class Scheme { stillinger_herrick, darboux, von_neumann_wigner };

inline constexpr std::array<Scheme, 3> kAllSchemes = {
    Scheme::stillinger_herrick, Scheme::darboux, Scheme::von_neumann_wigner};

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);  // sh | darboux | vnw (long names accepted)

struct BICSpec {
  Scheme scheme = Scheme::stillinger_herrick;
  double k = 1.0;
  double lambda = 1.0;
  void validate() const;
  double energy() const { return 0.5 * k * k; }
};

template <std::floating_point T>
T sinc(T x) {
  if (std::abs(x) < T(1e-4)) {
    const T x2 = x * x;
    return 1 - x2 / 6 + x2 * x2 / 120;
  }
  return std::sin(x) / x;
}

namespace detail {

constexpr double kSeriesBelow = 0.1;  // kr threshold for the small-r series

// sum_j c_j x^{2j} / (2j + 1 + shift) * x^{1 + shift}, where
// sin^2 x = sum_{j>=1} c_j x^{2j}, c_j = (-1)^{j+1} 2^{2j-1} / (2j)!.
template <std::floating_point T>
T sin2_moment_series(T x, int shift) {
  T term = x * x;  // c_1 x^2
  T sum = 0;
  for (int j = 1; j <= 9; ++j) {
    sum += term / T(2 * j + 1 + shift);
    term *= -4 * x * x / T((2 * j + 1) * (2 * j + 2));
  }
  return sum * std::pow(x, 1 + shift);
}

}  // namespace detail

/// Modulation variable s(r) >= 0, s(0) = 0:
///   SH:      1/2 (2kr)^2 - 2kr sin(2kr) - cos(2kr) + 1
///   Darboux: r/2 - sin(2kr)/(4k)
///   vNW:     (2kr - sin(2kr))^2
template <std::floating_point T>
T modulation_s(const BICSpec& spec, T r) {
  const T k = static_cast<T>(spec.k);
  const T x = k * r;
  const bool series = x < T(detail::kSeriesBelow);
  switch (spec.scheme) {
    case Scheme::stillinger_herrick:
      if (series) return 8 * detail::sin2_moment_series(x, 1);
      return (2 * x) * (2 * x) / 2 - 2 * x * std::sin(2 * x) - std::cos(2 * x) + 1;
    case Scheme::darboux:
      if (series) return detail::sin2_moment_series(x, 0) / k;
      return r / 2 - std::sin(2 * x) / (4 * k);
    case Scheme::von_neumann_wigner: {
      const T w = series ? 4 * detail::sin2_moment_series(x, 0) : 2 * x - std::sin(2 * x);
      return w * w;
    }
  }
  return T(0);
}

/// f(r) = 1 / (lambda + s(r)).
template <std::floating_point T>
T modulation_f(const BICSpec& spec, T r) {
  return 1 / (static_cast<T>(spec.lambda) + modulation_s(spec, r));
}

/// Psi(r) = sinc(kr) f(r); Psi(0) = 1/lambda.
template <std::floating_point T>
T bic_wavefunction(const BICSpec& spec, T r) {
  return sinc(static_cast<T>(spec.k) * r) * modulation_f(spec, r);
}

/// u(r) = r Psi(r) = sin(kr) f(r) / k.
template <std::floating_point T>
T radial_amplitude(const BICSpec& spec, T r) {
  const T k = static_cast<T>(spec.k);
  return std::sin(k * r) * modulation_f(spec, r) / k;
}

/// Isospectral potential with the bound state at E0 = k^2/2. All three
/// closed forms are regular at r = 0 (V(0) = 0).
template <std::floating_point T>
T bic_potential(const BICSpec& spec, T r) {
  const T k = static_cast<T>(spec.k);
  const T lam = static_cast<T>(spec.lambda);
  const T s = modulation_s(spec, r);
  const T d = lam + s;
  const T sn = std::sin(k * r);
  const T sn2 = sn * sn;
  const T sn4 = sn2 * sn2;
  const T s2kr = std::sin(2 * k * r);
  switch (spec.scheme) {
    case Scheme::stillinger_herrick:
      return 64 * k * k * k * k * r * r * sn4 / (d * d) -
             4 * k * k * (sn2 + 2 * k * r * s2kr) / d;
    case Scheme::darboux:
      return sn4 / (d * d) - k * s2kr / d;
    case Scheme::von_neumann_wigner:
      return -64 * k * k * lam * sn4 / (d * d) +
             (48 * k * k * sn4 - 8 * k * k * std::sqrt(s) * s2kr) / d;
  }
  return T(0);
}

/// Value type bundling a spec with its evaluators.
class BICPotential {
 public:
  explicit BICPotential(const BICSpec& spec) : spec_(spec) { spec_.validate(); }

  const BICSpec& spec() const { return spec_; }
  double energy() const { return spec_.energy(); }
  double s(double r) const { return modulation_s(spec_, r); }
  double f(double r) const { return modulation_f(spec_, r); }
  double potential(double r) const { return bic_potential(spec_, r); }
  double psi(double r) const { return bic_wavefunction(spec_, r); }
  double u(double r) const { return radial_amplitude(spec_, r); }

 private:
  BICSpec spec_;
};

/// Per-node |-u''/2 + V u - E0 u| / max|u| with centered second differences
/// on u = r Psi, evaluated in extended precision. End nodes are NaN.
std::vector<double> residual_profile(const BICSpec& spec, const GridSpec& grid);

/// Maximum of residual_profile over interior nodes. Requires a grid inside
/// [0, inf) with h <= 1e-3/k; throws GridError if halving h fails to shrink
/// the residual by at least 1/0.3 (the O(h^2) signature).
double verify_eigen_residual(const BICSpec& spec, const GridSpec& grid);

/// Residual of the unmodulated wave sin(kr) with V = 0 (the lambda -> inf
/// limit), same normalization.
double free_wave_residual(double k, const GridSpec& grid);

struct SchemeColumns {
  Scheme scheme = Scheme::stillinger_herrick;
  std::vector<double> s, f, V, psi;
  double small_r_exponent = 0.0;  // p in V ~ C r^p as r -> 0
};

struct SchemeTable {
  std::vector<double> r;
  std::array<SchemeColumns, 3> columns;
};

SchemeTable scheme_comparison_table(double k, double lambda, const GridSpec& r_grid);

/// Leading small-r power of V from a log-log slope at kr = 1e-3, 2e-3.
double small_r_exponent(const BICSpec& spec);

}  // namespace qstates::bic
