#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string_view>

#include "qstates/errors.hpp"
#include "qstates/specfun.hpp"

namespace qstates::wells {

using Complex = std::complex<double>;

/// Reference constants. Lengths in angstrom, energies in eV.
struct PhysicalConstants {
  static constexpr double rydberg_eV = 13.606;
  static constexpr double bohr_radius_angstrom = 0.529;
  static constexpr double hbar_SI = 1.054e-34;  // J s
  static constexpr double fine_structure = 1.0 / 137.036;
  static constexpr double hartree_eV = 2.0 * rydberg_eV;
  /// hc from Ry * a_B = alpha * hbar c / 2, i.e. hc = 4 pi Ry a_B / alpha.
  static constexpr double hc_eV_angstrom =
      4.0 * 3.14159265358979323846 * rydberg_eV * bohr_radius_angstrom / fine_structure;
};

enum class Family { box, ho1d, hydrogen, iso_ho };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);  // throws DomainError
bool is_radial(Family f);

struct BoxSpec {
  double width = 1.0;  // box occupies [-width/2, width/2]
};

/// Oscillator with hbar = m = 1, so lambda = m omega / hbar = omega.
struct OscSpec {
  double omega = 1.0;
  double lambda() const { return omega; }
};

struct HydrogenQN {
  int n = 1;
  int l = 0;
  int m = 0;
  void validate() const;
};

struct IsoOscQN {
  int n_r = 0;
  int l = 0;
  int m = 0;
  int N() const { return 2 * n_r + l; }
  void validate() const;
};

/// Quantum numbers, energy and (positive) normalization constant of one
/// closed-form eigenstate. For the radial families the constant is that of
/// the radial factor; the angular factor is a unit-normalized Y_l^m.
struct StationaryState {
  Family family = Family::box;
  int n = 1;  // box/ho: level; hydrogen: principal; iso_ho: radial n_r
  int l = 0;
  int m = 0;
  double energy = 0.0;
  double normalization = 1.0;
};

StationaryState box_state(int n, const BoxSpec& spec);
StationaryState ho_state(int n, const OscSpec& spec);
StationaryState hydrogen_state(const HydrogenQN& qn);
StationaryState iso_ho_state(const IsoOscQN& qn, const OscSpec& spec);

namespace detail {

void check_box(const BoxSpec& spec);
void check_osc(const OscSpec& spec);

template <std::floating_point T>
T ho_norm(int n, const OscSpec& spec) {
  // (lambda/pi)^{1/4} / sqrt(2^n n!)
  const T lam = static_cast<T>(spec.lambda());
  return std::exp(std::log(lam / std::numbers::pi_v<T>) / 4 -
                  (T(n) * std::log(T(2)) + specfun::log_factorial<T>(n)) / 2);
}

// R = N (2r/n)^l e^{-r/n} L^{2l+1}_{n-l-1}(2r/n)
template <std::floating_point T>
T hydrogen_norm(const HydrogenQN& qn) {
  const T n = qn.n;
  const T log_sq = 3 * std::log(2 / n) - std::log(2 * n) +
                   specfun::log_gamma_ratio<T>(n - qn.l, n + qn.l + 1);
  return std::exp(log_sq / 2);
}

// R = N r^l e^{-lambda r^2/2} L^{l+1/2}_{n_r}(lambda r^2)
template <std::floating_point T>
T iso_norm(const IsoOscQN& qn, const OscSpec& spec) {
  const T lam = static_cast<T>(spec.lambda());
  const T log_sq = std::log(T(2)) + (T(qn.l) + T(1.5)) * std::log(lam) +
                   specfun::log_gamma_ratio<T>(T(qn.n_r) + 1, T(qn.n_r + qn.l) + T(1.5));
  return std::exp(log_sq / 2);
}

}  // namespace detail

// Infinite square well, hbar = m = 1.
double box_energy(int n, const BoxSpec& spec);

/// sqrt(2/L) cos(n pi x / L) for odd n, sqrt(2/L) sin(n pi x / L) for even n,
/// zero outside and on the walls.
template <std::floating_point T>
T box_wavefunction(int n, T x, const BoxSpec& spec) {
  detail::check_box(spec);
  if (n < 1) throw DomainError("box level must be >= 1");
  const T width = static_cast<T>(spec.width);
  if (std::abs(x) >= width / 2) return T(0);
  const T arg = T(n) * std::numbers::pi_v<T> * x / width;
  const T amp = std::sqrt(2 / width);
  return n % 2 == 1 ? amp * std::cos(arg) : amp * std::sin(arg);
}

// One-dimensional oscillator.
double ho_energy(int n, const OscSpec& spec);

template <std::floating_point T>
T ho_wavefunction(int n, T x, const OscSpec& spec) {
  detail::check_osc(spec);
  if (n < 0) throw DomainError("oscillator level must be >= 0");
  const T lam = static_cast<T>(spec.lambda());
  return detail::ho_norm<T>(n, spec) * std::exp(-lam * x * x / 2) *
         specfun::hermite<T>(n, std::sqrt(lam) * x);
}

// Hydrogen in Rydberg atomic units: lengths in a_B, energies in Ry.
double hydrogen_energy(int n);
double hydrogen_energy_eV(int n);

/// Evaluated through the r^l-prefactored closed form, so R(0) is exact.
template <std::floating_point T>
T hydrogen_radial(const HydrogenQN& qn, T r) {
  qn.validate();
  if (r < 0) throw DomainError("radius must be nonnegative");
  const T rho = 2 * r / T(qn.n);
  return detail::hydrogen_norm<T>(qn) * std::pow(rho, qn.l) * std::exp(-rho / 2) *
         specfun::laguerre<T>(qn.n - qn.l - 1, T(2 * qn.l + 1), rho);
}

Complex hydrogen_wavefunction(const HydrogenQN& qn, double r, double theta, double phi);

// Isotropic three-dimensional oscillator.
double iso_ho_energy(const IsoOscQN& qn, const OscSpec& spec);

template <std::floating_point T>
T iso_ho_radial(const IsoOscQN& qn, T r, const OscSpec& spec) {
  qn.validate();
  detail::check_osc(spec);
  if (r < 0) throw DomainError("radius must be nonnegative");
  const T w = static_cast<T>(spec.lambda()) * r * r;
  return detail::iso_norm<T>(qn, spec) * std::pow(r, qn.l) * std::exp(-w / 2) *
         specfun::laguerre<T>(qn.n_r, T(qn.l) + T(0.5), w);
}

Complex iso_ho_wavefunction(const IsoOscQN& qn, double r, double theta, double phi,
                            const OscSpec& spec);

/// e^{-iEt} (hbar = 1).
Complex dynamical_phase(double energy, double t);

/// Number of states sharing one level: n^2 for hydrogen, (N+1)(N+2)/2 for
/// the isotropic oscillator.
long degeneracy(Family family, int level);

/// P(r) = r^2 R_nl(r)^2.
double radial_probability(const HydrogenQN& qn, double r);

/// <r^power> under P(r) for power >= -2.
double radial_moment(const HydrogenQN& qn, int power);

/// Outer classical turning point of the hydrogen radial motion (a_B).
double hydrogen_turning_point(const HydrogenQN& qn);

}  // namespace qstates::wells
