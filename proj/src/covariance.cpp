#include "gausswork/covariance.hpp"

#include <cmath>
#include <string>

namespace gausswork {

double determinant(const Matrix& m) {
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 4: {
      // Fixed-size path uses Eigen's cofactor expansion, which is exact-term
      // arithmetic and therefore invariant under paired sign flips.
      Eigen::Matrix4d f = m;
      return f.determinant();
    }
    case 6: {
      Eigen::Matrix<double, 6, 6> f = m;
      return Eigen::PartialPivLU<Eigen::Matrix<double, 6, 6>>(f).determinant();
    }
    default: {
      Eigen::MatrixXd f = m;
      return f.determinant();
    }
  }
}

CovarianceMatrix::CovarianceMatrix(int n_modes, const Matrix& entries) : n_modes_(n_modes) {
  if (n_modes < 1 || n_modes > kMaxModes)
    throw UnsupportedModeCount("mode count must be between 1 and " + std::to_string(kMaxModes));
  if (entries.rows() != 2 * n_modes || entries.cols() != 2 * n_modes)
    throw InvalidParams("covariance matrix must be 2n x 2n");
  // (m + m^T)/2 makes sigma(i,j) == sigma(j,i) bit-exact.
  m_ = 0.5 * (entries + entries.transpose());
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
  Matrix m = kVacuumVariance * Matrix::Identity(2 * n_modes, 2 * n_modes);
  return CovarianceMatrix(n_modes, m);
}

Eigen::Matrix2d CovarianceMatrix::mode_block(int mode) const {
  if (mode < 0 || mode >= n_modes_) throw InvalidModeSet("mode index out of range");
  return m_.block<2, 2>(2 * mode, 2 * mode);
}

double CovarianceMatrix::mode_determinant(int mode) const {
  Eigen::Matrix2d b = mode_block(mode);
  return b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
}

SymplecticInvariants two_mode_invariants(const CovarianceMatrix& sigma) {
  if (sigma.modes() != 2) throw UnsupportedModeCount("symplectic invariants need a two-mode state");
  SymplecticInvariants inv;
  inv.I1 = sigma.mode_determinant(0);
  inv.I2 = sigma.mode_determinant(1);
  const Matrix& m = sigma.entries();
  inv.I3 = m(0, 2) * m(1, 3) - m(0, 3) * m(1, 2);
  inv.I4 = sigma.det();
  return inv;
}

}  // namespace gausswork
