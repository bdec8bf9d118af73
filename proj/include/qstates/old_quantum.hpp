#pragma once

#include <functional>
#include <vector>

namespace qstates::oldq {

/// Circular Bohr orbit in Rydberg atomic units (lengths a_B, energies Ry).
struct OrbitSpec {
  int n = 1;
  double radius = 1.0;  // a_B
  double momentum = 1.0;  // hbar / a_B
  double energy = -1.0;  // Ry
};

/// Orbit from p * 2 pi a = n h and the centripetal/Coulomb balance.
OrbitSpec bohr_orbit(int n);
double bohr_radius(int n);  // a_B
double bohr_radius_angstrom(int n);

/// Photon wavelength in angstrom for a transition between levels given in eV.
double transition_wavelength(double e_upper_eV, double e_lower_eV);

struct TurningPoints {
  double lower = 0.0;
  double upper = 0.0;
};

/// One-dimensional well with an energy above its minimum at `center`.
struct ActionProblem {
  std::function<double(double)> potential;
  double energy = 1.0;
  double center = 0.0;
};

/// Bisection on V(x) - E (tolerance 1e-12) after a geometric outward scan.
TurningPoints turning_points(const ActionProblem& problem);

/// J = 2 int_{x-}^{x+} sqrt(2(E - V)) dx (m = 1) by Gauss–Chebyshev
/// quadrature of the second kind, which absorbs the square-root zeros of the
/// integrand at simple turning points.
double action_integral(const ActionProblem& problem, int nodes = 256);

/// Energy with J(E) = 2 pi n (hbar = 1), bisection to |dE| <= 1e-9.
double ws_quantize(const std::function<double(double)>& potential, int n, double center = 0.0);

/// Same for a closed-form action J(E) that is increasing on [e_min, inf).
double ws_quantize_action(const std::function<double(double)>& action, int n, double e_min);

/// |L| = sqrt(l(l+1)) in units of hbar, and in J s.
double angular_momentum_modulus(int l);
double angular_momentum_SI(int l);

/// Largest projection L_z = l hbar.
double max_projection(int l);

/// p_phi = m h / 2 pi, i.e. m in units of hbar.
double azimuthal_momentum(int m);

enum class Era { modern, old };

/// Allowed magnetic numbers for orbital number l. The old quantum theory
/// drops m = 0.
std::vector<int> magnetic_values(int l, Era era = Era::modern);
int orientation_count(int l, Era era = Era::modern);

/// Sommerfeld ellipse shape a/b = n/k.
double ellipse_axis_ratio(int n, int k);

}  // namespace qstates::oldq
