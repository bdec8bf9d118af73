#include "qstates/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qstates/errors.hpp"
#include "qstates/quadrature.hpp"

namespace qstates::sl {

namespace {

constexpr double kOverflow = 1e250;
constexpr double kEnergyTolerance = 1e-10;
constexpr int kMaxBisections = 200;

// u'' = q u coefficient at every node; q[0] is unused for radial problems.
std::vector<double> coefficients(const SLProblem& p, double energy, const GridSpec& grid) {
  const std::size_t n = grid.size();
  std::vector<double> q(n);
  const double centrifugal = p.left == Boundary::radial_origin ? p.l * (p.l + 1.0) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.at(i);
    if (p.left == Boundary::radial_origin && i == 0) {
      q[i] = 0.0;
      continue;
    }
    q[i] = p.scale * (p.potential(x) - energy) + (centrifugal != 0.0 ? centrifugal / (x * x) : 0.0);
  }
  return q;
}

// Frobenius data at the origin for chi = r^{l+1} (1 + c1 r + ...):
// returns (chi(h), lim_{r->0} q chi).
std::pair<double, double> origin_seed(const SLProblem& p, double h) {
  const double eps = 1e-9 * h;
  const double coulomb = eps * p.potential(eps);  // lim r V(r)
  const double c1 = p.scale * coulomb / (2.0 * (p.l + 1.0));
  const double chi1 = std::pow(h, p.l + 1) * (1.0 + c1 * h);
  double f0 = 0.0;
  if (p.l == 0) f0 = p.scale * coulomb;
  if (p.l == 1) f0 = 2.0;
  return {chi1, f0};
}

void rescale_prefix(std::vector<double>& u, std::size_t lo, std::size_t hi) {
  for (std::size_t j = lo; j <= hi; ++j) u[j] /= kOverflow;
}

// Forward integration filling u[0..stop].
void integrate_forward(const SLProblem& p, const std::vector<double>& q, const GridSpec& grid,
                       std::size_t stop, std::vector<double>& u) {
  const double h = grid.step;
  const double c = h * h / 12.0;
  u[0] = 0.0;
  double origin_term = 0.0;  // replaces (1 - c q0) u0 on the first step
  if (p.left == Boundary::radial_origin) {
    const auto [chi1, f0] = origin_seed(p, h);
    u[1] = chi1;
    origin_term = -c * f0;
  } else {
    u[1] = h;
  }
  for (std::size_t i = 1; i < stop; ++i) {
    const double back = (i == 1) ? origin_term : (1.0 - c * q[i - 1]) * u[i - 1];
    u[i + 1] = (2.0 * (1.0 + 5.0 * c * q[i]) * u[i] - back) / (1.0 - c * q[i + 1]);
    if (std::abs(u[i + 1]) > kOverflow) rescale_prefix(u, 0, i + 1);
  }
}

// Backward integration filling u[start..n-1].
void integrate_backward(const std::vector<double>& q, const GridSpec& grid, std::size_t start,
                        std::vector<double>& u) {
  const std::size_t n = u.size();
  const double h = grid.step;
  const double c = h * h / 12.0;
  u[n - 1] = 0.0;
  u[n - 2] = h;
  for (std::size_t i = n - 2; i > start; --i) {
    u[i - 1] = (2.0 * (1.0 + 5.0 * c * q[i]) * u[i] - (1.0 - c * q[i + 1]) * u[i + 1]) /
               (1.0 - c * q[i - 1]);
    if (std::abs(u[i - 1]) > kOverflow) rescale_prefix(u, i - 1, n - 1);
  }
}

int sign_changes(std::span<const double> u, double threshold) {
  int changes = 0;
  int last = 0;
  for (double v : u) {
    if (std::abs(v) <= threshold) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

double max_abs(std::span<const double> u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

// Outermost node in the classically allowed region, clamped to the interior.
std::size_t matching_index(const std::vector<double>& q) {
  const std::size_t n = q.size();
  std::size_t m = n / 2;
  for (std::size_t i = n - 2; i >= 1; --i) {
    if (q[i] < 0.0) {
      m = i;
      break;
    }
  }
  return std::clamp<std::size_t>(m, 2, n - 3);
}

struct Matched {
  double wronskian = 0.0;
  std::vector<double> left;
  std::vector<double> right;
};

Matched match_at(const SLProblem& p, double energy, const GridSpec& grid, std::size_t m) {
  const auto q = coefficients(p, energy, grid);
  Matched out;
  out.left.assign(q.size(), 0.0);
  out.right.assign(q.size(), 0.0);
  integrate_forward(p, q, grid, m + 1, out.left);
  integrate_backward(q, grid, m - 1, out.right);
  const auto& l = out.left;
  const auto& r = out.right;
  const double nl = std::sqrt(l[m - 1] * l[m - 1] + l[m] * l[m] + l[m + 1] * l[m + 1]);
  const double nr = std::sqrt(r[m - 1] * r[m - 1] + r[m] * r[m] + r[m + 1] * r[m + 1]);
  out.wronskian = (l[m] * (r[m + 1] - r[m - 1]) - r[m] * (l[m + 1] - l[m - 1])) / (nl * nr);
  return out;
}

double simpson_product(std::span<const double> a, std::span<const double> b,
                       const std::vector<double>& w, double h) {
  std::vector<double> f(a.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = w[i] * a[i] * b[i];
  return quad::simpson(f, h);
}

std::vector<double> weight_samples(const GridSpec& grid, const std::function<double(double)>& w) {
  std::vector<double> out(grid.size(), 1.0);
  if (w)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = w(grid.at(i));
  return out;
}

}  // namespace

double SLProblem::effective_potential(double x) const {
  const double v = potential(x);
  if (left != Boundary::radial_origin || l == 0) return v;
  return v + l * (l + 1.0) / (scale * x * x);
}

void SLProblem::validate() const {
  if (!potential) throw DomainError("SLProblem: potential not set");
  if (!(a < b)) throw DomainError("SLProblem: need a < b");
  if (!(scale > 0.0)) throw DomainError("SLProblem: scale must be positive");
  if (right == Boundary::radial_origin)
    throw DomainError("SLProblem: radial origin must be the left boundary");
  if (left == Boundary::radial_origin && (a != 0.0 || l < 0))
    throw DomainError("SLProblem: radial problems start at r = 0 with l >= 0");
}

std::vector<double> numerov_integrate(const SLProblem& problem, double energy,
                                      const GridSpec& grid, Direction direction) {
  problem.validate();
  grid.validate(2.0);
  const auto q = coefficients(problem, energy, grid);
  std::vector<double> u(q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!std::isfinite(q[i])) throw DomainError("numerov_integrate: potential not finite on grid");
  if (direction == Direction::forward)
    integrate_forward(problem, q, grid, q.size() - 1, u);
  else
    integrate_backward(q, grid, 0, u);
  return u;
}

int count_nodes_below(const SLProblem& problem, double energy, const GridSpec& grid) {
  const auto u = numerov_integrate(problem, energy, grid, Direction::forward);
  return sign_changes(std::span<const double>(u).subspan(1), 0.0);
}

EigenResult shoot_eigenvalue(const SLProblem& problem, const GridSpec& grid, int node_target,
                             double e_lo, double e_hi) {
  problem.validate();
  grid.validate();
  if (node_target < 0) throw DomainError("shoot_eigenvalue: negative node target");
  if (!(e_lo < e_hi)) throw BracketError("shoot_eigenvalue: empty energy bracket");

  int iterations = 0;
  int count_lo = count_nodes_below(problem, e_lo, grid);
  int count_hi = count_nodes_below(problem, e_hi, grid);
  if (count_lo > node_target || count_hi <= node_target)
    throw BracketError("shoot_eigenvalue: node counts " + std::to_string(count_lo) + ".." +
                       std::to_string(count_hi) + " exclude target " +
                       std::to_string(node_target));

  auto bisect_nodes = [&](bool to_tolerance) {
    while (to_tolerance ? (e_hi - e_lo > kEnergyTolerance)
                        : (count_lo != node_target || count_hi != node_target + 1)) {
      if (++iterations > kMaxBisections)
        throw ConvergenceError("shoot_eigenvalue: no convergence after 200 bisections");
      const double mid = 0.5 * (e_lo + e_hi);
      const int c = count_nodes_below(problem, mid, grid);
      if (c > node_target) {
        e_hi = mid;
        count_hi = c;
      } else {
        e_lo = mid;
        count_lo = c;
      }
    }
  };
  bisect_nodes(false);

  const std::size_t m = matching_index(coefficients(problem, 0.5 * (e_lo + e_hi), grid));
  double w_lo = match_at(problem, e_lo, grid, m).wronskian;
  const double w_hi = match_at(problem, e_hi, grid, m).wronskian;
  if ((w_lo > 0.0) != (w_hi > 0.0)) {
    while (e_hi - e_lo > kEnergyTolerance) {
      if (++iterations > kMaxBisections)
        throw ConvergenceError("shoot_eigenvalue: no convergence after 200 bisections");
      const double mid = 0.5 * (e_lo + e_hi);
      const double w = match_at(problem, mid, grid, m).wronskian;
      if (w == 0.0) {
        e_lo = e_hi = mid;
        break;
      }
      if ((w > 0.0) == (w_lo > 0.0)) {
        e_lo = mid;
        w_lo = w;
      } else {
        e_hi = mid;
      }
    }
  } else {
    bisect_nodes(true);
  }

  EigenResult result;
  result.energy = 0.5 * (e_lo + e_hi);
  result.grid = grid;
  result.iterations = iterations;

  Matched sol = match_at(problem, result.energy, grid, m);
  double dot = 0.0;
  double rr = 0.0;
  for (std::size_t j = m - 1; j <= m + 1; ++j) {
    dot += sol.left[j] * sol.right[j];
    rr += sol.right[j] * sol.right[j];
  }
  const double ratio = dot / rr;
  std::vector<double> u(sol.left.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = i <= m ? sol.left[i] : ratio * sol.right[i];

  const auto w = weight_samples(grid, problem.weight);
  const double norm = std::sqrt(simpson_product(u, u, w, grid.step));
  const double peak = max_abs(u);
  double sign = 1.0;
  for (double v : u) {
    if (std::abs(v) > 1e-3 * peak) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& v : u) v *= sign / norm;

  result.node_count = sign_changes(u, 1e-12 * max_abs(u));
  result.samples = std::move(u);
  result.converged = result.node_count == node_target;
  if (!result.converged)
    throw ConvergenceError("shoot_eigenvalue: eigenfunction has " +
                           std::to_string(result.node_count) + " nodes, expected " +
                           std::to_string(node_target));
  return result;
}

EigenResult find_eigenstate(const SLProblem& problem, const GridSpec& grid, int node_target) {
  problem.validate();
  grid.validate();
  double vmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < grid.size(); ++i)
    vmin = std::min(vmin, problem.effective_potential(grid.at(i)));
  const double e_lo = vmin;
  double step = std::max(1.0, 1e-3 * std::abs(vmin));
  double e_hi = e_lo + step;
  int scans = 0;
  while (count_nodes_below(problem, e_hi, grid) <= node_target) {
    if (++scans > 200) throw BracketError("find_eigenstate: node scan did not reach target");
    step *= 2.0;
    e_hi = e_lo + step;
  }
  return shoot_eigenvalue(problem, grid, node_target, e_lo, e_hi);
}

double decay_extent(const std::function<double(double)>& v_eff, double energy, double scale,
                    double from, int outward, double exponent) {
  const double dir = outward >= 0 ? 1.0 : -1.0;
  double x = from;
  double step = 1e-3;
  // Leave the classically allowed region.
  int guard = 0;
  while (v_eff(x) <= energy) {
    x += dir * step;
    step *= 1.02;
    if (++guard > 20000) throw DomainError("decay_extent: no classical turning point");
  }
  double accumulated = 0.0;
  double prev = std::sqrt(std::max(0.0, scale * (v_eff(x) - energy)));
  step = 1e-3;
  guard = 0;
  while (accumulated < exponent) {
    const double next_x = x + dir * step;
    const double cur = std::sqrt(std::max(0.0, scale * (v_eff(next_x) - energy)));
    accumulated += 0.5 * (prev + cur) * step;
    prev = cur;
    x = next_x;
    step *= 1.01;
    if (++guard > 20000) throw DomainError("decay_extent: state does not decay");
  }
  return x;
}

EigenResult solve_bound_state(const WellProblem& well, int node_target, double h) {
  if (!well.potential) throw DomainError("solve_bound_state: potential not set");
  if (!(h > 0.0)) throw DomainError("solve_bound_state: step must be positive");

  SLProblem problem;
  problem.potential = well.potential;
  problem.scale = well.scale;
  problem.l = well.l;
  if (well.radial) {
    problem.a = 0.0;
    problem.b = 10.0;
    problem.left = Boundary::radial_origin;
  } else {
    problem.a = well.center - 5.0;
    problem.b = well.center + 5.0;
    problem.left = Boundary::decay;
  }
  problem.right = Boundary::decay;
  const auto v_eff = [&problem](double x) { return problem.effective_potential(x); };

  for (int pass = 0; pass < 16; ++pass) {
    const auto intervals = static_cast<std::size_t>(std::ceil((problem.b - problem.a) / h));
    GridSpec grid{problem.a, problem.a + static_cast<double>(intervals) * h, h};
    problem.b = grid.end;
    EigenResult res = find_eigenstate(problem, grid, node_target);

    std::size_t peak = 0;
    for (std::size_t i = 0; i < res.samples.size(); ++i)
      if (std::abs(res.samples[i]) > std::abs(res.samples[peak])) peak = i;
    const double x_peak = grid.at(peak);

    double need_b = 0.0;
    double need_a = problem.a;
    try {
      need_b = decay_extent(v_eff, res.energy, well.scale, x_peak, +1);
      if (!well.radial) need_a = decay_extent(v_eff, res.energy, well.scale, x_peak, -1);
    } catch (const DomainError&) {
      // Level of the truncated problem sits above the asymptote: widen.
      const double width = problem.b - problem.a;
      if (well.radial) {
        problem.b *= 2.0;
      } else {
        problem.a -= 0.5 * width;
        problem.b += 0.5 * width;
      }
      continue;
    }
    if (need_b <= problem.b + 1e-12 && need_a >= problem.a - 1e-12) return res;
    problem.b = std::max(problem.b, need_b + 0.05 * (need_b - x_peak));
    if (!well.radial) problem.a = std::min(problem.a, need_a - 0.05 * (x_peak - need_a));
  }
  throw ConvergenceError("solve_bound_state: domain truncation did not settle");
}

Eigen::MatrixXd orthogonality_matrix(std::span<const EigenResult> states,
                                     const std::function<double(double)>& weight) {
  const auto n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd gram(n, n);
  if (n == 0) return gram;
  const GridSpec& grid = states.front().grid;
  for (const auto& s : states)
    if (!same_grid(s.grid, grid) || s.samples.size() != grid.size())
      throw GridError("orthogonality_matrix: states do not share a grid");
  const auto w = weight_samples(grid, weight);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      gram(i, j) = gram(j, i) = simpson_product(states[i].samples, states[j].samples, w, grid.step);
  return gram;
}

Expansion expand_in_eigenbasis(std::span<const double> target, std::span<const EigenResult> basis,
                               const std::function<double(double)>& weight) {
  Expansion out;
  if (basis.empty()) throw DomainError("expand_in_eigenbasis: empty basis");
  const GridSpec& grid = basis.front().grid;
  if (target.size() != grid.size()) throw GridError("expand_in_eigenbasis: target grid mismatch");
  for (const auto& s : basis)
    if (!same_grid(s.grid, grid) || s.samples.size() != grid.size())
      throw GridError("expand_in_eigenbasis: basis states do not share a grid");

  const auto w = weight_samples(grid, weight);
  std::vector<double> remainder(target.begin(), target.end());
  out.target_norm2 = simpson_product(target, target, w, grid.step);
  for (const auto& s : basis) {
    const double a = simpson_product(s.samples, target, w, grid.step) /
                     simpson_product(s.samples, s.samples, w, grid.step);
    out.coefficients.push_back(a);
    for (std::size_t i = 0; i < remainder.size(); ++i) remainder[i] -= a * s.samples[i];
  }
  out.residual_l2 = std::sqrt(std::max(0.0, simpson_product(remainder, remainder, w, grid.step)));
  return out;
}

double self_adjointness_defect(std::span<const double> u, std::span<const double> v,
                               std::span<const double> p, const GridSpec& grid) {
  const std::size_t n = grid.size();
  if (u.size() != n || v.size() != n || p.size() != n || n < 5)
    throw GridError("self_adjointness_defect: sample/grid mismatch");
  const double h = grid.step;

  auto apply = [&](std::span<const double> f) {
    std::vector<double> out(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double p_plus = 0.5 * (p[i] + p[i + 1]);
      const double p_minus = 0.5 * (p[i] + p[i - 1]);
      out[i] = (p_plus * (f[i + 1] - f[i]) - p_minus * (f[i] - f[i - 1])) / (h * h);
    }
    // Ends: p f'' + p' f' with second-order one-sided stencils.
    auto d1 = [h](double a0, double a1, double a2) { return (-3.0 * a0 + 4.0 * a1 - a2) / (2.0 * h); };
    auto d2 = [h](double a0, double a1, double a2, double a3) {
      return (2.0 * a0 - 5.0 * a1 + 4.0 * a2 - a3) / (h * h);
    };
    out[0] = p[0] * d2(f[0], f[1], f[2], f[3]) + d1(p[0], p[1], p[2]) * d1(f[0], f[1], f[2]);
    const std::size_t e = n - 1;
    // both one-sided first derivatives flip sign at the right end; the product does not
    out[e] = p[e] * d2(f[e], f[e - 1], f[e - 2], f[e - 3]) +
             d1(p[e], p[e - 1], p[e - 2]) * d1(f[e], f[e - 1], f[e - 2]);
    return out;
  };
  const auto lu = apply(u);
  const auto lv = apply(v);
  std::vector<double> integrand(n);
  for (std::size_t i = 0; i < n; ++i) integrand[i] = v[i] * lu[i] - u[i] * lv[i];
  return std::abs(quad::simpson(integrand, h));
}

}  // namespace qstates::sl
