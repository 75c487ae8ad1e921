#include "gausswork/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gausswork {

Eigen::Matrix2d rotation(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Matrix symplectic_form(int n_modes) {
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& sigma) {
  const int n = sigma.modes();
  Eigen::SelfAdjointEigenSolver<Matrix> sa(sigma.entries(), Eigen::EigenvaluesOnly);
  if (sa.eigenvalues().minCoeff() <= 0.0)
    throw NonPositiveDefinite("covariance matrix has an eigenvalue <= 0");

  // The spectrum of Omega*sigma is purely imaginary, +/- i*nu per mode; the
  // moduli come in pairs which sorted pairing merges.
  Matrix prod = symplectic_form(n) * sigma.entries();
  Eigen::EigenSolver<Matrix> es(prod, /*computeEigenvectors=*/false);
  std::vector<double> moduli(2 * n);
  for (int i = 0; i < 2 * n; ++i) moduli[i] = std::abs(es.eigenvalues()(i));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());

  std::vector<double> nu(n);
  for (int k = 0; k < n; ++k) nu[k] = 0.5 * (moduli[2 * k] + moduli[2 * k + 1]);
  return nu;
}

double min_symplectic_eigenvalue(const CovarianceMatrix& sigma) {
  return symplectic_eigenvalues(sigma).back();
}

bool is_physical(const CovarianceMatrix& sigma, double tol) {
  // Physical states are strictly positive definite, so a failed Cholesky
  // factorization settles most rejections cheaply.
  Eigen::LLT<Matrix> llt(sigma.entries());
  if (llt.info() != Eigen::Success) return false;

  Matrix prod = symplectic_form(sigma.modes()) * sigma.entries();
  Eigen::EigenSolver<Matrix> es(prod, false);
  double numin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < sigma.dim(); ++i) numin = std::min(numin, std::abs(es.eigenvalues()(i)));
  return numin >= kVacuumVariance - tol;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& sigma, std::span<const int> modes) {
  if (modes.empty()) throw InvalidModeSet("partial transpose needs a non-empty mode set");
  std::set<int> uniq(modes.begin(), modes.end());
  if (static_cast<int>(uniq.size()) >= sigma.modes())
    throw InvalidModeSet("partial transpose mode set must be a strict subset");
  for (int m : uniq)
    if (m < 0 || m >= sigma.modes()) throw InvalidModeSet("mode index out of range");

  Matrix out = sigma.entries();
  for (int m : uniq) {
    out.row(2 * m + 1) *= -1.0;
    out.col(2 * m + 1) *= -1.0;
  }
  return CovarianceMatrix(sigma.modes(), out);
}

double renyi2_entropy(const CovarianceMatrix& sigma) {
  const double d = sigma.det();
  if (d <= 0.0) throw NonPositiveDeterminant("covariance matrix has non-positive determinant");
  return 0.5 * std::log(d);
}

CovarianceMatrix condition_on_measurement(const CovarianceMatrix& sigma, int measured_mode,
                                          const SeedCovariance& seed) {
  const int n = sigma.modes();
  if (n < 2) throw UnsupportedModeCount("conditioning needs at least two modes");
  if (measured_mode < 0 || measured_mode >= n) throw InvalidModeSet("measured mode out of range");

  const int dim = 2 * n;
  const int rdim = dim - 2;
  const int b0 = 2 * measured_mode;

  // Gather the kept rows/columns.
  std::array<int, 6> keep{};
  int k = 0;
  for (int i = 0; i < dim; ++i)
    if (i != b0 && i != b0 + 1) keep[k++] = i;

  Matrix a(rdim, rdim);
  Eigen::Matrix<double, Eigen::Dynamic, 2, 0, 4, 2> cross(rdim, 2);
  for (int i = 0; i < rdim; ++i) {
    for (int j = 0; j < rdim; ++j) a(i, j) = sigma(keep[i], keep[j]);
    cross(i, 0) = sigma(keep[i], b0);
    cross(i, 1) = sigma(keep[i], b0 + 1);
  }
  Eigen::Matrix2d b = sigma.entries().block<2, 2>(b0, b0);

  Matrix result;
  if (seed.homodyne) {
    // Generalized inverse on the measured direction: rank-one update
    // A - (C v)(C v)^T / (v^T B v).
    Eigen::Vector2d v(std::cos(seed.angle), std::sin(seed.angle));
    const double s = v.dot(b * v);
    if (s <= 0.0) throw SingularConditioning("measured quadrature has non-positive variance");
    Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1> w = cross * v;
    result = a - (w * w.transpose()) / s;
  } else {
    Eigen::Matrix2d m = b + seed.gamma;
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (!(std::abs(det) > 1e-300)) throw SingularConditioning("seed plus reduced state is singular");
    Eigen::Matrix2d inv;
    inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    inv /= det;
    result = a - cross * inv * cross.transpose();
  }
  return CovarianceMatrix(n - 1, result);
}

}  // namespace gausswork
