#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qstates/errors.hpp"
#include "qstates/ladder.hpp"
#include "qstates/wells.hpp"

using namespace qstates;
using namespace qstates::ladder;
using doctest::Approx;

namespace {

Eigen::VectorXd basis(int d, int n) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
  e[n] = 1.0;
  return e;
}

std::vector<double> ground_samples(const GridSpec& g, double x0) {
  std::vector<double> v;
  for (double x : g.nodes()) v.push_back(coordinate_ground_state(x, x0));
  return v;
}

}  // namespace

TEST_CASE("build_ladder: matrix elements") {
  const auto ops = build_ladder(6);
  CHECK((ops.a.matrix * basis(6, 0)).norm() == 0.0);
  CHECK((ops.adag.matrix * basis(6, 0) - basis(6, 1)).norm() == 0.0);
  CHECK((ops.a.matrix * basis(6, 3) - std::sqrt(3.0) * basis(6, 2)).norm() <= 1e-15);
  CHECK((ops.adag.matrix - ops.a.matrix.transpose()).norm() == 0.0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (j != i + 1) CHECK(ops.a.matrix(i, j) == 0.0);
  CHECK_THROWS_AS(build_ladder(1), DomainError);
}

TEST_CASE("number operator and Hamiltonian") {
  const auto ops = build_ladder(12);
  const auto N = number_operator(ops);
  CHECK((N.matrix - N.matrix.transpose()).norm() == 0.0);
  for (int n = 0; n < 12; ++n) CHECK(N.matrix(n, n) == Approx(n));
  const auto spec = hamiltonian_spectrum(3, 1.0);
  REQUIRE(spec.size() == 3);
  CHECK(spec[0] == Approx(0.5));
  CHECK(spec[1] == Approx(1.5));
  CHECK(spec[2] == Approx(2.5));
  const auto wide = hamiltonian_spectrum(20, 1.7);
  for (int n = 0; n < 20; ++n) CHECK(wide[n] == Approx(wells::ho_energy(n, wells::OscSpec{1.7})));
  for (int n = 1; n < 20; ++n) CHECK(wide[n] - wide[n - 1] == Approx(1.7));

  std::mt19937_64 gen(11);
  std::normal_distribution<double> d;
  for (int i = 0; i < 100; ++i) {
    KetVector v(12);
    for (int j = 0; j < 12; ++j) v[j] = {d(gen), d(gen)};
    CHECK(number_expectation(N, v) >= 0.0);
  }
}

TEST_CASE("commutator truncation law") {
  CHECK(commutator_defect(2) == 0.0);
  CHECK(commutator_defect(40) <= 1e-12);
  for (int D : {2, 5, 40}) {
    const auto ops = build_ladder(D);
    const auto defect = commutator_minus_identity(ops);
    // [a, a^dagger] has -(D-1) in the corner, i.e. -D relative to identity.
    CHECK(defect(D - 1, D - 1) == Approx(-static_cast<double>(D)));
    double off_corner = 0.0;
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        if (i != D - 1 || j != D - 1) off_corner = std::max(off_corner, std::abs(defect(i, j)));
    CHECK(off_corner <= 1e-12);
  }
}

TEST_CASE("excitation ladder from the vacuum") {
  const auto ops = build_ladder(24);
  for (int n = 0; n <= 20; ++n) {
    KetVector e = KetVector::Zero(24);
    e[n] = 1.0;
    CHECK((excite_from_vacuum(ops, n) - e).cwiseAbs().maxCoeff() <= 1e-10);
  }
  CHECK_THROWS_AS(excite_from_vacuum(ops, 24), DomainError);
}

TEST_CASE("coordinate ground state") {
  CHECK(coordinate_ground_state(0.0, 1.0) == Approx(std::pow(std::numbers::pi, -0.25)));
  CHECK(coordinate_ground_state(0.8, 1.3) == coordinate_ground_state(-0.8, 1.3));
  // (x + x0^2 d/dx) psi0 = 0, checked by a centered difference.
  const double h = 1e-4;
  for (double x0 : {0.7, 1.0, 2.0})
    for (double x : {-1.5, -0.2, 0.6, 2.1}) {
      const double d = (coordinate_ground_state(x + h, x0) - coordinate_ground_state(x - h, x0)) / (2 * h);
      CHECK(std::abs(x * coordinate_ground_state(x, x0) + x0 * x0 * d) <= 1e-8);
    }
  CHECK_THROWS_AS(coordinate_ground_state(0.0, 0.0), DomainError);
}

TEST_CASE("coordinate raising reproduces the Hermite states") {
  const GridSpec g{-10.0, 10.0, 1e-3};
  const auto xs = g.nodes();
  auto psi = ground_samples(g, 1.0);
  for (int n = 0; n < 3; ++n) {
    const auto next = coordinate_raise(psi, g, 1.0, n);
    double err = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      err = std::max(err, std::abs(next[i] - wells::ho_wavefunction(n + 1, xs[i], wells::OscSpec{1.0})));
    CHECK(err <= (n == 0 ? 1e-6 : 1e-5));
    // Parity flips with every raise. Each raise differentiates, which
    // amplifies rounding asymmetry by about 1/h.
    const double sign = (n + 1) % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < xs.size(); i += 997)
      CHECK(std::abs(next[xs.size() - 1 - i] - sign * next[i]) <= 1e-7);
    psi = next;
  }
}

TEST_CASE("coordinate raising with another oscillator length") {
  const double x0 = 0.6;  // lambda = 1/x0^2
  const GridSpec g{-8.0, 8.0, 5e-4};
  auto psi = ground_samples(g, x0);
  psi = coordinate_raise(psi, g, x0, 0);
  const auto xs = g.nodes();
  double err = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    err = std::max(err, std::abs(psi[i] - wells::ho_wavefunction(1, xs[i], wells::OscSpec{1.0 / (x0 * x0)})));
  CHECK(err <= 1e-5);
}

TEST_CASE("coordinate raising rejects a coarse grid") {
  const GridSpec g{-10.0, 10.0, 0.5};
  const auto psi = ground_samples(g, 1.0);
  CHECK_THROWS_AS(coordinate_raise(psi, g, 1.0, 0), GridError);
}
