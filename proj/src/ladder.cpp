#include "qstates/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qstates/errors.hpp"
#include "qstates/quadrature.hpp"

namespace qstates::ladder {

LadderPair build_ladder(int dimension) {
  if (dimension < 2) throw DomainError("build_ladder: dimension must be >= 2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dimension, dimension);
  for (int n = 1; n < dimension; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {FockOperator{a}, FockOperator{a.transpose()}};
}

FockOperator number_operator(const LadderPair& ops) {
  return FockOperator{ops.adag.matrix * ops.a.matrix};
}

Eigen::MatrixXd commutator_minus_identity(const LadderPair& ops) {
  const auto& a = ops.a.matrix;
  const auto& ad = ops.adag.matrix;
  return a * ad - ad * a - Eigen::MatrixXd::Identity(a.rows(), a.cols());
}

double commutator_defect(int dimension) {
  const Eigen::MatrixXd c = commutator_minus_identity(build_ladder(dimension));
  const Eigen::Index k = dimension - 1;
  return c.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

std::vector<double> hamiltonian_spectrum(int dimension, double omega) {
  const LadderPair ops = build_ladder(dimension);
  const Eigen::MatrixXd h =
      omega * (number_operator(ops).matrix +
               0.5 * Eigen::MatrixXd::Identity(dimension, dimension));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

double number_expectation(const FockOperator& number, const KetVector& ket) {
  if (ket.size() != number.dimension())
    throw DomainError("number_expectation: dimension mismatch");
  const Eigen::VectorXcd nv = number.matrix.cast<std::complex<double>>() * ket;
  return ket.dot(nv).real();
}

KetVector excite_from_vacuum(const LadderPair& ops, int n) {
  const Eigen::Index d = ops.a.dimension();
  if (n < 0 || n >= d) throw DomainError("excite_from_vacuum: n outside basis");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
  v(0) = 1.0;
  for (int k = 1; k <= n; ++k) v = ops.adag.matrix * v / std::sqrt(static_cast<double>(k));
  return v.cast<std::complex<double>>();
}

double coordinate_ground_state(double x, double x0) {
  if (!(x0 > 0.0)) throw DomainError("oscillator length must be positive");
  const double y = x / x0;
  return std::exp(-0.5 * y * y) / std::sqrt(std::sqrt(std::numbers::pi) * x0);
}

std::vector<double> coordinate_raise(std::span<const double> psi_n, const GridSpec& grid,
                                     double x0, int n) {
  if (!(x0 > 0.0)) throw DomainError("oscillator length must be positive");
  if (n < 0) throw DomainError("coordinate_raise: n must be >= 0");
  const std::size_t size = psi_n.size();
  if (size != grid.size() || size < 3) throw GridError("coordinate_raise: grid/sample mismatch");

  const double h = grid.step;
  std::vector<double> derivative(size);
  for (std::size_t i = 1; i + 1 < size; ++i)
    derivative[i] = (psi_n[i + 1] - psi_n[i - 1]) / (2.0 * h);
  derivative[0] = (-3.0 * psi_n[0] + 4.0 * psi_n[1] - psi_n[2]) / (2.0 * h);
  derivative[size - 1] =
      (3.0 * psi_n[size - 1] - 4.0 * psi_n[size - 2] + psi_n[size - 3]) / (2.0 * h);

  const double scale = 1.0 / (std::sqrt(2.0 * (n + 1.0)) * x0);
  std::vector<double> raised(size);
  std::vector<double> density(size);
  for (std::size_t i = 0; i < size; ++i) {
    raised[i] = scale * (grid.at(i) * psi_n[i] - x0 * x0 * derivative[i]);
    density[i] = raised[i] * raised[i];
  }
  const double norm = std::sqrt(quad::simpson(density, h));
  if (std::abs(norm - 1.0) > 1e-3)
    throw GridError("coordinate_raise: raised state norm " + std::to_string(norm) +
                    " deviates from 1; grid too coarse or too short");
  for (double& v : raised) v /= norm;
  return raised;
}

}  // namespace qstates::ladder
