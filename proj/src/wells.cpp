#include "qstates/wells.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qstates/errors.hpp"
#include "qstates/quadrature.hpp"
#include "qstates/specfun.hpp"

namespace qstates::wells {

using std::numbers::pi;

std::string_view family_name(Family f) {
  switch (f) {
    case Family::box: return "box";
    case Family::ho1d: return "ho1d";
    case Family::hydrogen: return "hydrogen";
    case Family::iso_ho: return "iso_ho";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "box") return Family::box;
  if (name == "ho1d") return Family::ho1d;
  if (name == "hydrogen") return Family::hydrogen;
  if (name == "iso_ho") return Family::iso_ho;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

bool is_radial(Family f) { return f == Family::hydrogen || f == Family::iso_ho; }

void HydrogenQN::validate() const {
  if (n < 1 || l < 0 || l > n - 1 || std::abs(m) > l)
    throw DomainError("invalid hydrogen quantum numbers (n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
}

void IsoOscQN::validate() const {
  if (n_r < 0 || l < 0 || std::abs(m) > l)
    throw DomainError("invalid oscillator quantum numbers (n_r=" + std::to_string(n_r) +
                      ", l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
}

namespace detail {

void check_box(const BoxSpec& spec) {
  if (!(spec.width > 0.0)) throw DomainError("box width must be positive");
}

void check_osc(const OscSpec& spec) {
  if (!(spec.omega > 0.0)) throw DomainError("oscillator omega must be positive");
}

}  // namespace detail

using detail::check_box;
using detail::check_osc;

StationaryState box_state(int n, const BoxSpec& spec) {
  return {Family::box, n, 0, 0, box_energy(n, spec), std::sqrt(2.0 / spec.width)};
}

StationaryState ho_state(int n, const OscSpec& spec) {
  return {Family::ho1d, n, 0, 0, ho_energy(n, spec), detail::ho_norm<double>(n, spec)};
}

StationaryState hydrogen_state(const HydrogenQN& qn) {
  qn.validate();
  return {Family::hydrogen, qn.n, qn.l, qn.m, hydrogen_energy(qn.n), detail::hydrogen_norm<double>(qn)};
}

StationaryState iso_ho_state(const IsoOscQN& qn, const OscSpec& spec) {
  return {Family::iso_ho, qn.n_r, qn.l, qn.m, iso_ho_energy(qn, spec), detail::iso_norm<double>(qn, spec)};
}

double box_energy(int n, const BoxSpec& spec) {
  check_box(spec);
  if (n < 1) throw DomainError("box level must be >= 1");
  return pi * pi * n * n / (2.0 * spec.width * spec.width);
}

double ho_energy(int n, const OscSpec& spec) {
  check_osc(spec);
  if (n < 0) throw DomainError("oscillator level must be >= 0");
  return (n + 0.5) * spec.omega;
}

double hydrogen_energy(int n) {
  if (n < 1) throw DomainError("hydrogen principal number must be >= 1");
  return -1.0 / (static_cast<double>(n) * n);
}

double hydrogen_energy_eV(int n) {
  return hydrogen_energy(n) * PhysicalConstants::rydberg_eV;
}

Complex hydrogen_wavefunction(const HydrogenQN& qn, double r, double theta, double phi) {
  return hydrogen_radial<double>(qn, r) * specfun::spherical_harmonic(qn.l, qn.m, theta, phi);
}

double iso_ho_energy(const IsoOscQN& qn, const OscSpec& spec) {
  qn.validate();
  check_osc(spec);
  return spec.omega * (qn.N() + 1.5);
}

Complex iso_ho_wavefunction(const IsoOscQN& qn, double r, double theta, double phi,
                            const OscSpec& spec) {
  return iso_ho_radial<double>(qn, r, spec) * specfun::spherical_harmonic(qn.l, qn.m, theta, phi);
}

Complex dynamical_phase(double energy, double t) { return std::polar(1.0, -energy * t); }

long degeneracy(Family family, int level) {
  switch (family) {
    case Family::hydrogen:
      if (level < 1) throw DomainError("hydrogen level must be >= 1");
      return static_cast<long>(level) * level;
    case Family::iso_ho:
      if (level < 0) throw DomainError("oscillator shell must be >= 0");
      return static_cast<long>(level + 1) * (level + 2) / 2;
    default:
      throw DomainError("degeneracy defined for hydrogen and iso_ho only");
  }
}

double radial_probability(const HydrogenQN& qn, double r) {
  const double R = hydrogen_radial<double>(qn, r);
  return r * r * R * R;
}

double hydrogen_turning_point(const HydrogenQN& qn) {
  qn.validate();
  const double n2 = static_cast<double>(qn.n) * qn.n;
  return n2 * (1.0 + std::sqrt(1.0 - qn.l * (qn.l + 1.0) / n2));
}

double radial_moment(const HydrogenQN& qn, int power) {
  qn.validate();
  if (power <= -3) throw DomainError("radial_moment: <r^p> diverges for p <= -3");
  const double r_max = 40.0 * hydrogen_turning_point(qn);
  const auto rule = quad::gauss_legendre(400, 0.0, r_max);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    sum += rule.weights[i] * radial_probability(qn, r) * std::pow(r, power);
  }
  return sum;
}

}  // namespace qstates::wells
