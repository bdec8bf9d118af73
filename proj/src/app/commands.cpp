#include "qstates/app/commands.hpp"

#include <cmath>
#include <complex>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "qstates/app/output.hpp"
#include "qstates/app/verify.hpp"
#include "qstates/errors.hpp"
#include "qstates/old_quantum.hpp"
#include "qstates/sturm_liouville.hpp"

namespace qstates::app {

namespace {

using wells::Family;

double tolerance_override(const RunConfig& c, std::string_view key, double fallback) {
  for (const auto& [k, v] : c.tolerances)
    if (k == key) return v;
  return fallback;
}

GridArg default_eigen_grid(const RunConfig& c) {
  switch (c.family) {
    case Family::box: return {-c.width / 2, c.width / 2, 1001};
    case Family::ho1d: {
      const double reach = 2.0 * std::sqrt(2.0 * c.n + 1.0) + 6.0;
      return {-reach / std::sqrt(c.omega), reach / std::sqrt(c.omega), 1001};
    }
    case Family::hydrogen: return {0.0, 2.0 * c.n * c.n + 10.0 * c.n, 1001};
    case Family::iso_ho: {
      const double reach = std::sqrt(2.0 * (2 * c.n + c.l) + 3.0) + 5.0;
      return {0.0, reach / std::sqrt(c.omega), 1001};
    }
  }
  return {};
}

struct EigenSetup {
  std::function<std::complex<double>(double)> psi;
  double energy = 0.0;  // natural units
  int dimension = 1;
};

EigenSetup eigen_setup(const RunConfig& c) {
  EigenSetup s;
  switch (c.family) {
    case Family::box: {
      const wells::BoxSpec spec{c.width};
      s.energy = wells::box_energy(c.n, spec);
      s.psi = [n = c.n, spec](double x) { return std::complex<double>(wells::box_wavefunction(n, x, spec)); };
      break;
    }
    case Family::ho1d: {
      const wells::OscSpec spec{c.omega};
      s.energy = wells::ho_energy(c.n, spec);
      s.psi = [n = c.n, spec](double x) { return std::complex<double>(wells::ho_wavefunction(n, x, spec)); };
      break;
    }
    case Family::hydrogen: {
      const wells::HydrogenQN qn{c.n, c.l, c.m};
      qn.validate();
      s.energy = 0.5 * wells::hydrogen_energy(c.n);
      s.dimension = 3;
      s.psi = [qn, th = c.theta, ph = c.phi](double r) {
        return wells::hydrogen_wavefunction(qn, r, th, ph);
      };
      break;
    }
    case Family::iso_ho: {
      const wells::IsoOscQN qn{c.n, c.l, c.m};
      const wells::OscSpec spec{c.omega};
      s.energy = wells::iso_ho_energy(qn, spec);
      s.dimension = 3;
      s.psi = [qn, spec, th = c.theta, ph = c.phi](double r) {
        return wells::iso_ho_wavefunction(qn, r, th, ph, spec);
      };
      break;
    }
  }
  return s;
}

std::string quantum_numbers(const RunConfig& c) {
  if (wells::is_radial(c.family)) return fmt::format("n={} l={} m={}", c.n, c.l, c.m);
  return fmt::format("n={}", c.n);
}

// Energy (natural units) and Numerov result for one spectrum row.
struct SpectrumRow {
  int label = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  int nodes = 0;
};

SpectrumRow spectrum_row(const RunConfig& c, int index) {
  SpectrumRow row;
  switch (c.family) {
    case Family::box: {
      const wells::BoxSpec spec{c.width};
      row.label = index + 1;
      row.analytic = wells::box_energy(row.label, spec);
      sl::SLProblem p;
      p.potential = [](double) { return 0.0; };
      p.a = -c.width / 2;
      p.b = c.width / 2;
      const auto res = sl::find_eigenstate(p, GridSpec::from_points(p.a, p.b, 4001), index);
      row.numeric = res.energy;
      row.nodes = res.node_count;
      break;
    }
    case Family::ho1d: {
      const wells::OscSpec spec{c.omega};
      row.label = index;
      row.analytic = wells::ho_energy(index, spec);
      const double w2 = c.omega * c.omega;
      const auto res = sl::solve_bound_state(
          sl::WellProblem{[w2](double x) { return 0.5 * w2 * x * x; }}, index, 1e-2 / std::sqrt(c.omega));
      row.numeric = res.energy;
      row.nodes = res.node_count;
      break;
    }
    case Family::hydrogen: {
      row.label = c.l + 1 + index;
      row.analytic = 0.5 * wells::hydrogen_energy(row.label);
      const auto res = sl::solve_bound_state(
          sl::WellProblem{[](double r) { return -2.0 / r; }, true, c.l, 1.0}, index, 2e-3);
      row.numeric = 0.5 * res.energy;  // Ry -> Hartree
      row.nodes = res.node_count;
      break;
    }
    case Family::iso_ho: {
      const wells::OscSpec spec{c.omega};
      row.label = index;
      row.analytic = wells::iso_ho_energy(wells::IsoOscQN{index, c.l, 0}, spec);
      const double w2 = c.omega * c.omega;
      const auto res = sl::solve_bound_state(
          sl::WellProblem{[w2](double r) { return 0.5 * w2 * r * r; }, true, c.l, 2.0}, index,
          5e-3 / std::sqrt(c.omega));
      row.numeric = res.energy;
      row.nodes = res.node_count;
      break;
    }
  }
  return row;
}

void write_output(const RunConfig& c, const std::string& text, std::ostream& stdout_stream) {
  if (c.out.empty()) {
    stdout_stream << text;
    stdout_stream.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::ios_base::failure("cannot open '" + c.out + "' for writing");
  f << text;
  f.close();
  if (!f) throw std::ios_base::failure("write to '" + c.out + "' failed");
}

}  // namespace

std::string render_eigenstate(const RunConfig& c) {
  const EigenSetup setup = eigen_setup(c);
  const GridArg g = c.grid.value_or(default_eigen_grid(c));
  if (wells::is_radial(c.family) && g.start < 0.0) throw UsageError("radial grid must start at r >= 0");
  const GridSpec grid = g.spec();
  const UnitScale us = unit_scale(effective_units(c));
  const double psi_scale = std::pow(us.length, -0.5 * setup.dimension);

  std::vector<std::complex<double>> psi(g.points);
  parallel_for(g.points, c.threads, [&](std::size_t i) { psi[i] = setup.psi(grid.at(i)); });

  std::string out = "x,psi_re,psi_im,prob_density\n";
  for (std::size_t i = 0; i < g.points; ++i) {
    const std::complex<double> v = psi[i] * psi_scale;
    out += fmt::format("{},{},{},{}\n", format_real(grid.at(i) * us.length), format_real(v.real()),
                       format_real(v.imag()), format_real(std::norm(v)));
  }
  out += fmt::format("# family={} {} E={} units={} length={} energy={}\n", wells::family_name(c.family),
                     quantum_numbers(c), format_real(setup.energy * us.energy),
                     units_name(effective_units(c)), us.length_name, us.energy_name);
  return out;
}

void write_spectrum(const RunConfig& c, std::ostream& out) {
  if (c.count < 1 || c.count > 10) throw UsageError("--count must be in 1..10");
  if (c.family == Family::box) wells::detail::check_box(wells::BoxSpec{c.width});
  if (c.family == Family::ho1d || c.family == Family::iso_ho) wells::detail::check_osc(wells::OscSpec{c.omega});
  if (wells::is_radial(c.family) && c.l < 0) throw UsageError("--l must be >= 0");
  const UnitScale us = unit_scale(effective_units(c));

  const auto count = static_cast<std::size_t>(c.count);
  std::vector<std::optional<SpectrumRow>> rows(count);
  std::vector<std::exception_ptr> errors(count);
  parallel_for(count, c.threads, [&](std::size_t i) {
    try {
      rows[i] = spectrum_row(c, static_cast<int>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });

  out << "n,analytic_E,numerov_E,abs_err,node_count\n";
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    const SpectrumRow& r = *rows[i];
    const double a = r.analytic * us.energy;
    const double e = r.numeric * us.energy;
    out << fmt::format("{},{},{},{},{}\n", r.label, format_real(a), format_real(e),
                       format_real(std::abs(e - a)), r.nodes);
  }
  out << fmt::format("# family={}{} units={} energy={}\n", wells::family_name(c.family),
                     wells::is_radial(c.family) ? fmt::format(" l={}", c.l) : std::string(),
                     units_name(effective_units(c)), us.energy_name);
}

std::string render_bic(const RunConfig& c, bool* residual_ok) {
  const bic::BICSpec spec{c.scheme, c.k, c.lambda};
  spec.validate();
  const GridArg g = c.grid.value_or(GridArg{0.0, 50.0 / c.k, 100001});
  if (g.start < 0.0) throw UsageError("bic grid must start at r >= 0");
  const GridSpec grid = g.spec();
  if (grid.step > 1e-3 / c.k * (1.0 + 1e-12)) throw UsageError("bic grid step must be <= 1e-3/k");
  const UnitScale us = unit_scale(effective_units(c));
  const double psi_scale = std::pow(us.length, -1.5);
  const bic::BICPotential pot(spec);

  struct Row { double s, f, V, psi; };
  std::vector<Row> rows(g.points);
  parallel_for(g.points, c.threads, [&](std::size_t i) {
    const double r = grid.at(i);
    rows[i] = Row{pot.s(r), pot.f(r), pot.potential(r), pot.psi(r)};
  });
  const std::vector<double> residual = bic::residual_profile(spec, grid);

  double max_residual = 0.0;
  for (double v : residual)
    if (std::isfinite(v)) max_residual = std::max(max_residual, v);
  bool converging = true;
  try {
    bic::verify_eigen_residual(spec, grid);
  } catch (const GridError&) {
    converging = false;
  }
  const bool ok = converging && max_residual <= tolerance_override(c, "bic_residual", 1e-5);
  if (residual_ok) *residual_ok = ok;

  std::string out = "r,s,f,V,psi,u_residual\n";
  for (std::size_t i = 0; i < g.points; ++i) {
    const Row& w = rows[i];
    out += fmt::format("{},{},{},{},{},{}\n", format_real(grid.at(i) * us.length), format_real(w.s),
                       format_real(w.f), format_real(w.V * us.energy), format_real(w.psi * psi_scale),
                       std::isfinite(residual[i]) ? format_real(residual[i] * us.energy) : std::string("nan"));
  }
  out += fmt::format("# scheme={} k={} lambda={} units={}\n", bic::scheme_name(c.scheme), format_real(c.k),
                     format_real(c.lambda), units_name(effective_units(c)));
  out += fmt::format("# E0={} max_residual={}{}\n", format_real(spec.energy() * us.energy),
                     format_real(max_residual * us.energy), ok ? "" : " FAILED");
  return out;
}

std::string render_oldquantum(const RunConfig& c) {
  if (c.count < 1 || c.count > 20) throw UsageError("--count (n_max) must be in 1..20");
  wells::detail::check_osc(wells::OscSpec{c.omega});
  const UnitScale us = unit_scale(effective_units(c));
  const double ry = wells::PhysicalConstants::rydberg_eV;
  const double w2 = c.omega * c.omega;
  const auto ho = [w2](double x) { return 0.5 * w2 * x * x; };

  std::string out = "n,bohr_radius_aB,bohr_energy_eV,ws_ho_E\n";
  for (int n = 1; n <= c.count; ++n) {
    const oldq::OrbitSpec orbit = oldq::bohr_orbit(n);
    out += fmt::format("{},{},{},{}\n", n, format_real(orbit.radius), format_real(orbit.energy * ry),
                       format_real(oldq::ws_quantize(ho, n) * us.energy));
  }
  out += "# transitions\n";
  out += "n_upper,n_lower,lambda_angstrom\n";
  for (int up = 2; up <= c.count; ++up)
    for (int lo = 1; lo < up; ++lo)
      out += fmt::format("{},{},{}\n", up, lo,
                         format_real(oldq::transition_wavelength(wells::hydrogen_energy_eV(up),
                                                                 wells::hydrogen_energy_eV(lo))));
  if (c.delta_e_eV) {
    if (!(*c.delta_e_eV > 0.0)) throw UsageError("--delta-e must be positive");
    out += fmt::format("# delta_E_eV={} lambda_angstrom={}\n", format_real(*c.delta_e_eV),
                       format_real(oldq::transition_wavelength(*c.delta_e_eV, 0.0)));
  }
  out += fmt::format("# omega={} units={} energy={}\n", format_real(c.omega), units_name(effective_units(c)),
                     us.energy_name);
  return out;
}

int run(const RunConfig& c, std::ostream& stdout_stream, std::ostream& err) {
  try {
    Tolerances known;
    for (const auto& [k, v] : c.tolerances) known.set(k, v);
    switch (c.command) {
      case Command::eigenstate:
        write_output(c, render_eigenstate(c), stdout_stream);
        return kOk;
      case Command::oldquantum:
        write_output(c, render_oldquantum(c), stdout_stream);
        return kOk;
      case Command::bic: {
        bool ok = true;
        const std::string text = render_bic(c, &ok);
        write_output(c, text, stdout_stream);
        if (!ok) err << "bic: eigen-residual check FAILED\n";
        return ok ? kOk : kResidualFailed;
      }
      case Command::spectrum: {
        if (c.out.empty()) {
          std::ostringstream buf;
          write_spectrum(c, buf);
          stdout_stream << buf.str();
          return kOk;
        }
        std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
        if (!f) throw std::ios_base::failure("cannot open '" + c.out + "' for writing");
        try {
          write_spectrum(c, f);
        } catch (...) {
          f.close();
          std::error_code ec;
          std::filesystem::remove(c.out, ec);
          throw;
        }
        f.close();
        if (!f) throw std::ios_base::failure("write to '" + c.out + "' failed");
        return kOk;
      }
      case Command::verify: {
        VerifyOptions opts;
        for (const auto& [k, v] : c.tolerances) opts.tolerances.set(k, v);
        for (const auto& g : c.only)
          if (std::find(verify_groups().begin(), verify_groups().end(), g) == verify_groups().end())
            throw UsageError("unknown verification group '" + g + "'");
        opts.only = c.only;
        opts.threads = c.threads > 1 ? c.threads : 4;
        const auto checks = run_checks(opts);
        write_output(c, format_report(checks), stdout_stream);
        return all_passed(checks) ? kOk : kVerifyFailed;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const GridError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kBadArguments;
}

}  // namespace qstates::app
