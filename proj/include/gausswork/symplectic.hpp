#pragma once

#include <span>
#include <vector>

#include "gausswork/covariance.hpp"

namespace gausswork {

/// Planar rotation [[cos phi, -sin phi], [sin phi, cos phi]].
Eigen::Matrix2d rotation(double phi);

/// Symplectic form: block diagonal with 2x2 blocks [[0, 1], [-1, 0]].
Matrix symplectic_form(int n_modes);

/// Symplectic spectrum of a positive definite covariance matrix, i.e. the n
/// moduli of the (purely imaginary) eigenvalues of i*Omega*sigma, returned in
/// descending order. Degenerate +/- pairs are merged by sorted pairing.
/// Throws NonPositiveDefinite when sigma has an eigenvalue <= 0.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& sigma);

double min_symplectic_eigenvalue(const CovarianceMatrix& sigma);

/// A covariance matrix describes a quantum state iff it is positive definite
/// and every symplectic eigenvalue is >= 1/2 (up to tol). Never throws.
bool is_physical(const CovarianceMatrix& sigma, double tol = kPhysicalTol);

/// Momentum-sign flip of the listed modes, P*sigma*P. The mode set must be a
/// non-empty strict subset of all modes.
CovarianceMatrix partial_transpose(const CovarianceMatrix& sigma, std::span<const int> modes);

/// Renyi-2 entropy of a Gaussian state, (1/2) ln det sigma, in nats.
/// Throws NonPositiveDeterminant when det sigma <= 0.
double renyi2_entropy(const CovarianceMatrix& sigma);

/// Pure Gaussian seed state of a measurement, as consumed by the
/// conditioning kernel. Either a finite 2x2 covariance, or the exact
/// single-quadrature projector limit at a given angle.
struct SeedCovariance {
  bool homodyne = false;
  double angle = 0.0;                                // measured quadrature direction
  Eigen::Matrix2d gamma = Eigen::Matrix2d::Zero();   // finite seed covariance
};

/// Conditional state of the unmeasured modes after a Gaussian measurement on
/// a single mode: the Schur complement sigma_A - C (sigma_B + gamma)^{-1} C^T.
/// In the exact projector limit the inverse is replaced by the generalized
/// inverse on the measured quadrature direction, which reduces to a rank-one
/// update. The result is independent of the measurement outcome.
CovarianceMatrix condition_on_measurement(const CovarianceMatrix& sigma, int measured_mode,
                                          const SeedCovariance& seed);

}  // namespace gausswork
