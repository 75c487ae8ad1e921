#include "gausswork/measurement.hpp"

#include <cmath>
#include <numbers>

namespace gausswork {

SeedCovariance seed_covariance(const GaussianMeasurement& m) {
  SeedCovariance seed;
  const double lambda = m.strength;
  if (std::isnan(lambda) || lambda < 0.0)
    throw InvalidParams("measurement strength must be in [0, inf]");

  if (lambda == 0.0) {
    seed.homodyne = true;
    seed.angle = m.angle;
    return seed;
  }
  if (std::isinf(lambda)) {
    // The orthogonal quadrature is measured instead.
    seed.homodyne = true;
    seed.angle = m.angle + std::numbers::pi / 2;
    return seed;
  }
  if (lambda == 1.0) {
    seed.gamma = 0.5 * Eigen::Matrix2d::Identity();
    return seed;
  }
  Eigen::Matrix2d r = rotation(m.angle);
  seed.gamma = r * Eigen::Vector2d(0.5 * lambda, 0.5 / lambda).asDiagonal() * r.transpose();
  return seed;
}

CovarianceMatrix conditional_bipartite(const CovarianceMatrix& sigma_ab,
                                       const GaussianMeasurement& on_b) {
  if (sigma_ab.modes() != 2) throw UnsupportedModeCount("conditional_bipartite needs two modes");
  return condition_on_measurement(sigma_ab, on_b.mode, seed_covariance(on_b));
}

CovarianceMatrix conditional_tripartite(const CovarianceMatrix& sigma_abc,
                                        const GaussianMeasurement& first,
                                        const GaussianMeasurement& second) {
  if (sigma_abc.modes() != 3) throw UnsupportedModeCount("conditional_tripartite needs three modes");
  if (first.mode == second.mode) throw InvalidModeSet("the two measured modes must differ");

  CovarianceMatrix intermediate =
      condition_on_measurement(sigma_abc, first.mode, seed_covariance(first));
  // Removing the first mode shifts the higher indices down by one.
  int second_mode = second.mode > first.mode ? second.mode - 1 : second.mode;
  return condition_on_measurement(intermediate, second_mode, seed_covariance(second));
}

OutcomeDistribution outcome_covariance_two_measurements(const CovarianceMatrix& sigma_ab,
                                                        const GaussianMeasurement& on_b,
                                                        const GaussianMeasurement& on_a) {
  CovarianceMatrix conditioned = conditional_bipartite(sigma_ab, on_b);
  SeedCovariance seed_a = seed_covariance(on_a);

  OutcomeDistribution out;
  if (seed_a.homodyne) {
    out.one_dimensional = true;
    out.direction = Eigen::Vector2d(std::cos(seed_a.angle), std::sin(seed_a.angle));
    out.variance = out.direction.dot(conditioned.entries() * out.direction);
  } else {
    out.covariance = Eigen::Matrix2d(conditioned.entries()) + seed_a.gamma;
  }
  return out;
}

}  // namespace gausswork
