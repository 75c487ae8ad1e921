#pragma once

#include "gausswork/symplectic.hpp"

namespace gausswork {

/// A single-mode Gaussian measurement with pure seed state
/// gamma = R(phi) diag(lambda/2, 1/(2 lambda)) R(phi)^T.
/// strength = 0 is homodyne (exact projector limit), strength = 1 is
/// heterodyne, strength = +inf is the orthogonal homodyne and is represented
/// internally as homodyne at phi + pi/2.
struct GaussianMeasurement {
  double strength = 1.0;
  double angle = 0.0;
  int mode = 1;

  static GaussianMeasurement homodyne(double phi, int mode = 1) { return {0.0, phi, mode}; }
  static GaussianMeasurement heterodyne(int mode = 1) { return {1.0, 0.0, mode}; }
};

/// Seed covariance of the measurement. Heterodyne returns exactly
/// (1/2)*Identity for every angle; strength 0 or inf yields the projector
/// descriptor. Throws InvalidParams for negative or NaN strength.
SeedCovariance seed_covariance(const GaussianMeasurement& m);

/// Conditional state of the unmeasured mode of a two-mode state.
CovarianceMatrix conditional_bipartite(const CovarianceMatrix& sigma_ab,
                                       const GaussianMeasurement& on_b);

/// Conditional single-mode state left after two successive measurements on
/// distinct modes of a three-mode state. `first` is applied first; its mode
/// index refers to the full three-mode state, as does `second`'s.
CovarianceMatrix conditional_tripartite(const CovarianceMatrix& sigma_abc,
                                        const GaussianMeasurement& first,
                                        const GaussianMeasurement& second);

/// Covariance of the outcome statistics when the keeping party also measures
/// her conditioned mode. For finite strength this is the 2x2 matrix
/// sigma_a^{pi_b} + gamma^{pi_a}; for a homodyne second measurement the
/// statistics are one-dimensional and only the variance along the measured
/// direction is meaningful.
struct OutcomeDistribution {
  bool one_dimensional = false;
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();  // valid when !one_dimensional
  double variance = 0.0;                                 // valid when one_dimensional
  Eigen::Vector2d direction = Eigen::Vector2d::UnitX();  // measured direction
};

OutcomeDistribution outcome_covariance_two_measurements(const CovarianceMatrix& sigma_ab,
                                                        const GaussianMeasurement& on_b,
                                                        const GaussianMeasurement& on_a);

}  // namespace gausswork
