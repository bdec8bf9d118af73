#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qstates/grid.hpp"

namespace qstates::ladder {

/// Dense operator on the truncated number basis {|0>, ..., |D-1>}.
struct FockOperator {
  Eigen::MatrixXd matrix;
  Eigen::Index dimension() const { return matrix.rows(); }
};

using KetVector = Eigen::VectorXcd;

struct LadderPair {
  FockOperator a;     // annihilation: a[n-1, n] = sqrt(n)
  FockOperator adag;  // creation: transpose of a
};

LadderPair build_ladder(int dimension);

/// N = a^dagger a.
FockOperator number_operator(const LadderPair& ops);

/// [a, a^dagger] - I.
Eigen::MatrixXd commutator_minus_identity(const LadderPair& ops);

/// max |([a, a^dagger] - I)_{ij}| over the leading (D-1)x(D-1) block. The
/// corner entry (D-1, D-1) is the truncation artifact -D and is excluded.
double commutator_defect(int dimension);

/// Eigenvalues of omega (N + 1/2), ascending.
std::vector<double> hamiltonian_spectrum(int dimension, double omega);

/// <v|N|v> for a ket of matching dimension.
double number_expectation(const FockOperator& number, const KetVector& ket);

/// (a^dagger)^n e_0 / sqrt(n!).
KetVector excite_from_vacuum(const LadderPair& ops, int n);

/// pi^{-1/4} x0^{-1/2} exp(-(x/x0)^2 / 2).
double coordinate_ground_state(double x, double x0);

/// Applies (x - x0^2 d/dx) / (sqrt(2(n+1)) x0) to samples of psi_n on a
/// uniform grid (centered differences inside, second-order one-sided at the
/// ends), then rescales to unit norm. Throws GridError if the norm before
/// rescaling differs from 1 by more than 1e-3.
std::vector<double> coordinate_raise(std::span<const double> psi_n, const GridSpec& grid,
                                     double x0, int n);

}  // namespace qstates::ladder
