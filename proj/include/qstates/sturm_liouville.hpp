#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "qstates/grid.hpp"

namespace qstates::sl {

enum class Boundary {
  dirichlet,      // hard wall, u = 0
  decay,          // infinite domain truncated deep in the forbidden region
  radial_origin,  // chi(0) = 0 with chi ~ r^{l+1}
};

/// Schrödinger-form Sturm–Liouville problem
///
///   u'' = [scale * (V(x) - E) + l(l+1)/x^2] u   on [a, b].
///
/// `scale` is 2m/hbar^2: 2 for hbar = m = 1, 1 for Rydberg units. In the
/// Sturm–Liouville form (p u')' + q u = -mu w u this is p = 1, w = 1,
/// q = -scale V and mu = scale E, so mu and E order identically. The
/// centrifugal term is only used with a radial_origin left boundary.
struct SLProblem {
  std::function<double(double)> potential;
  double a = 0.0;
  double b = 1.0;
  Boundary left = Boundary::dirichlet;
  Boundary right = Boundary::dirichlet;
  int l = 0;
  double scale = 2.0;
  std::function<double(double)> weight;  // empty means w = 1

  /// V + l(l+1)/(scale x^2).
  double effective_potential(double x) const;
  double weight_at(double x) const { return weight ? weight(x) : 1.0; }
  void validate() const;
};

struct EigenResult {
  double energy = 0.0;
  GridSpec grid;
  std::vector<double> samples;  // normalized with the problem weight
  int node_count = 0;
  bool converged = false;
  int iterations = 0;
};

enum class Direction { forward, backward };

/// Numerov integration across the whole grid. Forward starts at the left
/// boundary (u = 0, unit slope; radial problems use the r^{l+1} Frobenius
/// seed), backward starts at the right boundary with u = 0. Amplitudes are
/// rescaled whenever |u| exceeds 1e250.
std::vector<double> numerov_integrate(const SLProblem& problem, double energy,
                                      const GridSpec& grid, Direction direction);

/// Sign changes of the forward solution on the grid: the number of
/// eigenvalues of the discretized problem lying below `energy`.
int count_nodes_below(const SLProblem& problem, double energy, const GridSpec& grid);

/// Bisection for the eigenvalue whose eigenfunction has `node_target`
/// interior nodes, inside [e_lo, e_hi]. Node counts narrow the bracket to
/// a single eigenvalue, then the sign of the normalized Wronskian of the
/// inward and outward solutions at the outermost classical turning point
/// (the log-derivative mismatch multiplied through by u_L u_R, so it has
/// no poles) drives the bisection to |dE| <= 1e-10.
///
/// Throws BracketError if the node counts at the ends exclude the target
/// and ConvergenceError after 200 bisections.
EigenResult shoot_eigenvalue(const SLProblem& problem, const GridSpec& grid, int node_target,
                             double e_lo, double e_hi);

/// Same, with the bracket found by a node scan upward from min V_eff.
EigenResult find_eigenstate(const SLProblem& problem, const GridSpec& grid, int node_target);

/// Description of a well on an unbounded domain; the solver chooses the
/// truncation from the WKB decay exponent (see solve_bound_state).
struct WellProblem {
  std::function<double(double)> potential;
  bool radial = false;  // half-line [0, inf) with chi(0) = 0, else full line
  int l = 0;
  double scale = 2.0;
  double center = 0.0;  // location of the potential minimum (full line)
};

/// Truncation point beyond the classical turning point where the WKB decay
/// exponent integral of sqrt(scale (V_eff - E)) reaches `exponent`.
/// `outward` is +1 (search to the right of `from`) or -1.
double decay_extent(const std::function<double(double)>& v_eff, double energy, double scale,
                    double from, int outward, double exponent = 25.0);

/// Finds the bound state with `node_target` nodes on step `h`, growing the
/// truncated domain until it covers the decay extent of the found energy.
EigenResult solve_bound_state(const WellProblem& well, int node_target, double h);

/// Gram matrix <w u_i, u_j> by composite Simpson. Throws GridError when the
/// states do not share one grid.
Eigen::MatrixXd orthogonality_matrix(std::span<const EigenResult> states,
                                     const std::function<double(double)>& weight = {});

struct Expansion {
  std::vector<double> coefficients;
  double residual_l2 = 0.0;  // || target - sum a_n u_n ||_w
  double target_norm2 = 0.0;  // || target ||_w^2
};

/// a_n = <w u_n, target> / <w u_n, u_n>.
Expansion expand_in_eigenbasis(std::span<const double> target, std::span<const EigenResult> basis,
                               const std::function<double(double)>& weight = {});

/// | int (v L u - u L v) dx | with L u = (p u')', discretized by
/// conservative central differences and Simpson quadrature.
double self_adjointness_defect(std::span<const double> u, std::span<const double> v,
                               std::span<const double> p, const GridSpec& grid);

}  // namespace qstates::sl
