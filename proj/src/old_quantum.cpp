#include "qstates/old_quantum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qstates/errors.hpp"
#include "qstates/wells.hpp"

namespace qstates::oldq {

using std::numbers::pi;

OrbitSpec bohr_orbit(int n) {
  if (n < 1) throw DomainError("Bohr orbit needs n >= 1");
  // Rydberg units: hbar = 1, m = 1/2, e^2/(4 pi eps0) = 2.
  constexpr double mass = 0.5;
  constexpr double coulomb = 2.0;
  // p a = n hbar and p^2/(m a) = coulomb/a^2  =>  a = n^2 hbar^2 / (m coulomb)
  const double radius = static_cast<double>(n) * n / (mass * coulomb);
  const double momentum = n / radius;
  const double energy = momentum * momentum / (2.0 * mass) - coulomb / radius;
  return {n, radius, momentum, energy};
}

double bohr_radius(int n) { return bohr_orbit(n).radius; }

double bohr_radius_angstrom(int n) {
  return bohr_radius(n) * wells::PhysicalConstants::bohr_radius_angstrom;
}

double transition_wavelength(double e_upper_eV, double e_lower_eV) {
  const double gap = e_upper_eV - e_lower_eV;
  if (gap == 0.0) throw DomainError("transition_wavelength: degenerate levels");
  if (gap < 0.0) throw DomainError("transition_wavelength: upper level below lower level");
  return wells::PhysicalConstants::hc_eV_angstrom / gap;
}

namespace {

double find_wall(const ActionProblem& p, int dir) {
  const auto excess = [&p](double x) { return p.potential(x) - p.energy; };
  double inside = p.center;
  double step = 1e-6;
  double outside = p.center + dir * step;
  while (excess(outside) <= 0.0) {
    inside = outside;
    step *= 2.0;
    outside = p.center + dir * step;
    if (step > 1e12) throw DomainError("action: no classical turning point");
  }
  while (std::abs(outside - inside) > 1e-12 * std::max(1.0, std::abs(inside))) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    (excess(mid) <= 0.0 ? inside : outside) = mid;
  }
  return 0.5 * (inside + outside);
}

}  // namespace

TurningPoints turning_points(const ActionProblem& problem) {
  if (!problem.potential) throw DomainError("action: potential not set");
  if (!(problem.potential(problem.center) < problem.energy))
    throw DomainError("action: energy not above the well minimum, no turning points");
  return {find_wall(problem, -1), find_wall(problem, +1)};
}

double action_integral(const ActionProblem& problem, int nodes) {
  if (nodes < 1) throw DomainError("action_integral: need at least one node");
  if (!problem.potential) throw DomainError("action: potential not set");
  if (problem.potential(problem.center) >= problem.energy) return 0.0;
  const TurningPoints tp = turning_points(problem);
  const double mid = 0.5 * (tp.upper + tp.lower);
  const double half = 0.5 * (tp.upper - tp.lower);
  double sum = 0.0;
  for (int i = 1; i <= nodes; ++i) {
    const double theta = i * pi / (nodes + 1.0);
    const double t = std::cos(theta);
    const double s = std::sin(theta);
    const double weight = pi / (nodes + 1.0) * s * s;
    const double kinetic = std::max(0.0, problem.energy - problem.potential(mid + half * t));
    sum += weight * std::sqrt(2.0 * kinetic) / s;
  }
  return 2.0 * half * sum;
}

double ws_quantize_action(const std::function<double(double)>& action, int n, double e_min) {
  if (n < 1) throw DomainError("ws_quantize: n must be >= 1");
  const double target = 2.0 * pi * n;
  double lo = e_min;
  double width = 1.0;
  double hi = e_min + width;
  int guard = 0;
  while (action(hi) < target) {
    lo = hi;
    width *= 2.0;
    hi = e_min + width;
    if (++guard > 200) throw BracketError("ws_quantize: root not bracketed");
  }
  if (action(lo) > target) throw BracketError("ws_quantize: root not bracketed");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (action(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ws_quantize(const std::function<double(double)>& potential, int n, double center) {
  const double e_min = potential(center);
  return ws_quantize_action(
      [&](double e) { return action_integral(ActionProblem{potential, e, center}); }, n, e_min);
}

double angular_momentum_modulus(int l) {
  if (l < 0) throw DomainError("orbital number must be >= 0");
  return std::sqrt(l * (l + 1.0));
}

double angular_momentum_SI(int l) {
  return angular_momentum_modulus(l) * wells::PhysicalConstants::hbar_SI;
}

double max_projection(int l) {
  if (l < 0) throw DomainError("orbital number must be >= 0");
  return l;
}

double azimuthal_momentum(int m) { return m; }

std::vector<int> magnetic_values(int l, Era era) {
  if (l < 0) throw DomainError("orbital number must be >= 0");
  std::vector<int> out;
  for (int m = -l; m <= l; ++m)
    if (era == Era::modern || m != 0) out.push_back(m);
  return out;
}

int orientation_count(int l, Era era) {
  return static_cast<int>(magnetic_values(l, era).size());
}

double ellipse_axis_ratio(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw DomainError("ellipse_axis_ratio: need 1 <= k <= n");
  return static_cast<double>(n) / k;
}

}  // namespace qstates::oldq
