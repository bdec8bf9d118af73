#include "qstates/app/output.hpp"

#include <fmt/format.h>

#include "qstates/wells.hpp"

namespace qstates::app {

std::string format_real(double v) { return fmt::format("{:.11e}", v); }

UnitScale unit_scale(Units u) {
  using C = wells::PhysicalConstants;
  switch (u) {
    case Units::natural: return {1.0, 1.0, "a_B", "Hartree"};
    case Units::rydberg: return {1.0, 2.0, "a_B", "Ry"};
    case Units::ev: return {C::bohr_radius_angstrom, C::hartree_eV, "angstrom", "eV"};
  }
  return {};
}

}  // namespace qstates::app
