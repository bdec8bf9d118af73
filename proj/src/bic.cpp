#include "qstates/bic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qstates::bic {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::stillinger_herrick: return "sh";
    case Scheme::darboux: return "darboux";
    case Scheme::von_neumann_wigner: return "vnw";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "sh" || name == "stillinger_herrick") return Scheme::stillinger_herrick;
  if (name == "darboux" || name == "d") return Scheme::darboux;
  if (name == "vnw" || name == "von_neumann_wigner") return Scheme::von_neumann_wigner;
  throw DomainError("unknown scheme '" + std::string(name) + "'");
}

void BICSpec::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("k must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
}

namespace {

using Ext = long double;

template <class Potential, class Amplitude>
std::vector<double> fd_residual(const GridSpec& grid, Ext energy, Potential V, Amplitude u) {
  const std::size_t n = grid.size();
  std::vector<Ext> uv(n);
  const Ext h = static_cast<Ext>(grid.step);
  Ext umax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    uv[i] = u(static_cast<Ext>(grid.start) + static_cast<Ext>(i) * h);
    umax = std::max(umax, std::abs(uv[i]));
  }
  std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
  if (umax == 0) return out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Ext r = static_cast<Ext>(grid.start) + static_cast<Ext>(i) * h;
    const Ext d2 = (uv[i + 1] - 2 * uv[i] + uv[i - 1]) / (h * h);
    out[i] = static_cast<double>(std::abs(-d2 / 2 + (V(r) - energy) * uv[i]) / umax);
  }
  return out;
}

double interior_max(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v)
    if (std::isfinite(x)) m = std::max(m, x);
  return m;
}

void check_half_line(const GridSpec& grid) {
  grid.validate(2.0);
  if (grid.start < 0.0) throw GridError("residual grid must lie in r >= 0");
}

}  // namespace

std::vector<double> residual_profile(const BICSpec& spec, const GridSpec& grid) {
  spec.validate();
  check_half_line(grid);
  return fd_residual(
      grid, static_cast<Ext>(spec.k) * static_cast<Ext>(spec.k) / 2,
      [&](Ext r) { return bic_potential<Ext>(spec, r); },
      [&](Ext r) { return radial_amplitude<Ext>(spec, r); });
}

double verify_eigen_residual(const BICSpec& spec, const GridSpec& grid) {
  spec.validate();
  check_half_line(grid);
  if (grid.step > 1e-3 / spec.k * (1.0 + 1e-12))
    throw GridError("grid too coarse: step must be <= 1e-3/k");
  const double coarse = interior_max(residual_profile(spec, grid));
  const double fine = interior_max(residual_profile(spec, grid.refined()));
  if (coarse > 0.0 && fine / coarse > 0.3)
    throw GridError("grid too coarse: residual ratio " + std::to_string(fine / coarse) +
                    " under step halving exceeds 0.3");
  return coarse;
}

double free_wave_residual(double k, const GridSpec& grid) {
  if (!(k > 0.0)) throw DomainError("k must be positive");
  check_half_line(grid);
  const Ext kk = static_cast<Ext>(k);
  return interior_max(fd_residual(
      grid, kk * kk / 2, [](Ext) { return Ext(0); },
      [kk](Ext r) { return std::sin(kk * r); }));
}

double small_r_exponent(const BICSpec& spec) {
  spec.validate();
  const Ext r1 = 1e-3L / static_cast<Ext>(spec.k);
  const Ext v1 = std::abs(bic_potential<Ext>(spec, r1));
  const Ext v2 = std::abs(bic_potential<Ext>(spec, 2 * r1));
  return static_cast<double>(std::log(v2 / v1) / std::log(Ext(2)));
}

SchemeTable scheme_comparison_table(double k, double lambda, const GridSpec& r_grid) {
  check_half_line(r_grid);
  SchemeTable table;
  table.r = r_grid.nodes();
  for (std::size_t c = 0; c < kAllSchemes.size(); ++c) {
    const BICPotential pot(BICSpec{kAllSchemes[c], k, lambda});
    SchemeColumns& col = table.columns[c];
    col.scheme = kAllSchemes[c];
    for (double r : table.r) {
      col.s.push_back(pot.s(r));
      col.f.push_back(pot.f(r));
      col.V.push_back(pot.potential(r));
      col.psi.push_back(pot.psi(r));
    }
    col.small_r_exponent = small_r_exponent(pot.spec());
  }
  return table;
}

}  // namespace qstates::bic
