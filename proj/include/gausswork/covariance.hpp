#pragma once

#include <Eigen/Dense>

#include "gausswork/errors.hpp"

namespace gausswork {

/// Quadrature variances are dimensionless, hbar = 1, vacuum variance 1/2.
/// All physicality thresholds in the library are locked to this convention.
inline constexpr double kVacuumVariance = 0.5;

/// Default tolerance on the smallest symplectic eigenvalue when deciding
/// whether a matrix is a valid quantum covariance matrix.
inline constexpr double kPhysicalTol = 1e-9;

/// Everything in this toolkit lives on one, two or three modes.
inline constexpr int kMaxModes = 3;

/// Dense real matrix with inline storage up to 6x6.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 2 * kMaxModes, 2 * kMaxModes>;

/// Determinant of a 2x2, 4x4 or 6x6 matrix.
double determinant(const Matrix& m);

/// Covariance matrix of an n-mode Gaussian state (n <= 3), quadrature
/// ordering (q1, p1, ..., qn, pn). First moments are fixed to zero.
/// Construction symmetrizes the entries, so sigma(i,j) == sigma(j,i) holds
/// exactly afterwards.
class CovarianceMatrix {
 public:
  CovarianceMatrix(int n_modes, const Matrix& entries);

  static CovarianceMatrix vacuum(int n_modes);

  int modes() const { return n_modes_; }
  int dim() const { return 2 * n_modes_; }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  /// 2x2 reduced covariance of one mode.
  Eigen::Matrix2d mode_block(int mode) const;
  double mode_determinant(int mode) const;
  double det() const { return determinant(m_); }

 private:
  int n_modes_;
  Matrix m_;
};

/// Local and global symplectic invariants of a two-mode state:
/// I1, I2 are the determinants of the reduced blocks, I3 the determinant of
/// the correlation block and I4 the global determinant.
struct SymplecticInvariants {
  double I1 = 0.0;
  double I2 = 0.0;
  double I3 = 0.0;
  double I4 = 0.0;
  double Delta() const { return I1 + I2 + 2.0 * I3; }
};

SymplecticInvariants two_mode_invariants(const CovarianceMatrix& sigma);

}  // namespace gausswork
