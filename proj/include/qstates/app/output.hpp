#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qstates/app/config.hpp"

namespace qstates::app {

/// 12 significant digits, scientific.
std::string format_real(double v);

/// Factors taking natural-unit values (lengths a_B, energies Hartree) to
/// the requested system.
struct UnitScale {
  double length = 1.0;
  double energy = 1.0;
  std::string_view length_name;
  std::string_view energy_name;
};
UnitScale unit_scale(Units u);

/// Calls fn(i) for i in [0, n) on up to `threads` workers using fixed
/// contiguous chunks. fn must only write to slot i of its outputs.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  const std::size_t workers =
      std::clamp<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
}

}  // namespace qstates::app
