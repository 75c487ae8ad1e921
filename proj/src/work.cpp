#include "gausswork/work.hpp"

#include <cmath>
#include <numbers>

namespace gausswork {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundSlack = 1e-9;

// Shared shape of the closed-form family expressions:
//   (1/2) sum_{k=0,1} ln[ A (P l^k + Q l^{1-k}) / (R l^k + S l^{1-k}) ].
// The limit l -> inf equals the value at l = 0.
double lambda_pair_sum(double lambda, double A, double P, double Q, double R, double S) {
  if (std::isinf(lambda)) lambda = 0.0;
  const double t0 = A * (P + Q * lambda) / (R + S * lambda);
  const double t1 = A * (P * lambda + Q) / (R * lambda + S);
  return 0.5 * (std::log(t0) + std::log(t1));
}

void check_strength(double lambda) {
  if (std::isnan(lambda) || lambda < 0.0)
    throw InvalidParams("measurement strength must be in [0, inf]");
}

void check_symmetric(double a, double c) {
  if (a < 0.5) throw InvalidParams("local variance must satisfy a >= 1/2");
  if (std::abs(c) > c_max_symmetric(a) + kBoundSlack)
    throw InvalidParams("symmetric squeezed thermal state requires |c| <= sqrt(a^2 - 1/4)");
}

void check_sts(double a, double b, double c) {
  if (a < 0.5 || b < 0.5)
    throw InvalidParams("local variances must satisfy a >= 1/2 and b >= 1/2");
  if (std::abs(c) > c_max_sts(a, b) + kBoundSlack)
    throw InvalidParams(
        "squeezed thermal state requires |c| <= sqrt((max(a,b)+1/2)(min(a,b)-1/2))");
}

}  // namespace

std::string work_path_name(WorkPath p) {
  switch (p) {
    case WorkPath::Generic:
      return "generic";
    case WorkPath::GenericAveraged:
      return "generic-averaged";
    case WorkPath::ClosedSymmetric:
      return "closed-symmetric-sts";
    case WorkPath::ClosedSts:
      return "closed-sts";
    case WorkPath::SeparableSymmetric:
      return "separable-threshold-symmetric";
    case WorkPath::SeparableSts:
      return "separable-threshold-sts";
    case WorkPath::SeparableGeneralBound:
      return "separable-bound-general";
    case WorkPath::TwoMeasurement:
      return "two-measurement";
    case WorkPath::Tripartite:
      return "tripartite";
  }
  return "?";
}

namespace {
std::string tolerance_text(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", tol);
  return buf;
}
}  // namespace

double average_over_angle(const std::function<double(double)>& f, double tol, int max_nodes) {
  int n = 16;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(kTwoPi * i / n);
  double prev = sum / n;

  while (n < max_nodes) {
    double add = 0.0;
    for (int i = 0; i < n; ++i) add += f(kTwoPi * (i + 0.5) / n);
    sum += add;
    n *= 2;
    const double cur = sum / n;
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw QuadratureFailure("angle average did not converge to tolerance " + tolerance_text(tol));
}

double average_over_angles(const std::function<double(double, double)>& f, double tol,
                           int max_nodes_per_dim) {
  auto grid = [&f](int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum += f(kTwoPi * i / n, kTwoPi * j / n);
    return sum / (static_cast<double>(n) * n);
  };

  int n = 16;
  double prev = grid(n);
  while (n < max_nodes_per_dim) {
    n *= 2;
    const double cur = grid(n);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw QuadratureFailure("two-angle average did not converge to tolerance " +
                          tolerance_text(tol));
}

WorkResult work_one_measurement(const CovarianceMatrix& sigma_ab,
                                const GaussianMeasurement& on_b) {
  if (sigma_ab.modes() != 2)
    throw UnsupportedModeCount("work_one_measurement needs a two-mode state");
  const int keeper = 1 - on_b.mode;
  const double det_before = sigma_ab.mode_determinant(keeper);
  const double det_after = conditional_bipartite(sigma_ab, on_b).det();

  WorkResult r;
  r.value = 0.5 * std::log(det_before / det_after);
  r.path = WorkPath::Generic;
  r.first = on_b;
  return r;
}

WorkResult work_avg_angle(const CovarianceMatrix& sigma_ab, double lambda, int measured_mode,
                          double tol) {
  check_strength(lambda);
  WorkResult r;
  r.value = average_over_angle(
      [&](double phi) {
        return work_one_measurement(sigma_ab, GaussianMeasurement{lambda, phi, measured_mode})
            .value;
      },
      tol);
  r.path = WorkPath::GenericAveraged;
  r.averaged = true;
  r.first = GaussianMeasurement{lambda, 0.0, measured_mode};
  return r;
}

WorkResult work_symmetric_closed(double a, double c, double lambda) {
  check_symmetric(a, c);
  check_strength(lambda);
  WorkResult r;
  r.value = lambda_pair_sum(lambda, a, 2.0 * a, 1.0, 2.0 * (a * a - c * c), a);
  r.path = WorkPath::ClosedSymmetric;
  return r;
}

WorkResult work_sep_symmetric(double a, double lambda) {
  if (a < 0.5) throw InvalidParams("local variance must satisfy a >= 1/2");
  check_strength(lambda);
  WorkResult r;
  r.value = lambda_pair_sum(lambda, 2.0 * a, 2.0 * a, 1.0, 4.0 * a - 1.0, 2.0 * a);
  r.path = WorkPath::SeparableSymmetric;
  return r;
}

double work_max_symmetric(double a) {
  if (a < 0.5) throw InvalidParams("local variance must satisfy a >= 1/2");
  return std::log(2.0 * a);
}

WorkResult work_sts_closed(double a, double b, double c, double lambda) {
  check_sts(a, b, c);
  check_strength(lambda);
  WorkResult r;
  r.value = lambda_pair_sum(lambda, a, 2.0 * b, 1.0, 2.0 * (a * b - c * c), a);
  r.path = WorkPath::ClosedSts;
  return r;
}

WorkResult work_sep_sts(double a, double b, double lambda) {
  if (a < 0.5 || b < 0.5)
    throw InvalidParams("local variances must satisfy a >= 1/2 and b >= 1/2");
  check_strength(lambda);
  WorkResult r;
  r.value = lambda_pair_sum(lambda, 2.0 * a, 2.0 * b, 1.0, 2.0 * a + 2.0 * b - 1.0, 2.0 * a);
  r.path = WorkPath::SeparableSts;
  return r;
}

double work_max_sts_homodyne(double a, double b) {
  return 0.5 * std::log(4.0 * a * b / (1.0 + 2.0 * std::abs(a - b)));
}

double work_max_sts_heterodyne(double a, double b) {
  if (a <= b) return std::log(2.0 * a);
  return std::log(2.0 * a * (1.0 + 2.0 * b) / (1.0 + 4.0 * a - 2.0 * b));
}

double work_max_sts(double a, double b, double lambda) {
  if (lambda == 0.0 || std::isinf(lambda)) return work_max_sts_homodyne(a, b);
  if (lambda == 1.0) return work_max_sts_heterodyne(a, b);
  return work_sts_closed(a, b, c_max_sts(a, b), lambda).value;
}

double separable_work_q_correlated(double a, double b, double lambda, double phi) {
  if (a < 0.5 || b < 0.5)
    throw InvalidParams("local variances must satisfy a >= 1/2 and b >= 1/2");
  check_strength(lambda);
  if (std::isinf(lambda)) {
    lambda = 0.0;
    phi += std::numbers::pi / 2;
  }
  const double a2 = a * a;
  const double b2 = b * b;
  const double l2 = lambda * lambda;
  const double num = 16.0 * a2 * b * (2.0 * b + lambda) * (2.0 * b * lambda + 1.0);
  const double den = (4.0 * a2 - 1.0) * (4.0 * b2 - 1.0) * (l2 - 1.0) * std::cos(2.0 * phi) +
                     4.0 * a2 * (4.0 * b2 * (l2 + 1.0) + 8.0 * b * lambda + l2 + 1.0) +
                     (4.0 * b2 - 1.0) * (4.0 * b * lambda + l2 + 1.0);
  return 0.5 * std::log(num / den);
}

WorkResult separable_bound_general(double a, double b, double lambda, double tol) {
  const double sts_branch = work_sep_sts(a, b, lambda).value;
  const double q_branch = average_over_angle(
      [&](double phi) { return separable_work_q_correlated(a, b, lambda, phi); }, tol);

  WorkResult r;
  r.value = std::max(sts_branch, q_branch);
  r.path = WorkPath::SeparableGeneralBound;
  r.averaged = true;
  return r;
}

WorkResult work_two_measurements(const CovarianceMatrix& sigma_ab,
                                 const GaussianMeasurement& on_b,
                                 const GaussianMeasurement& on_a) {
  if (sigma_ab.modes() != 2)
    throw UnsupportedModeCount("work_two_measurements needs a two-mode state");
  if (on_a.mode == on_b.mode) throw InvalidModeSet("the two parties must measure distinct modes");

  const int keeper = 1 - on_b.mode;
  const Eigen::Matrix2d sa = sigma_ab.mode_block(keeper);
  const Eigen::Matrix2d cond = conditional_bipartite(sigma_ab, on_b).entries();
  const SeedCovariance seed_a = seed_covariance(on_a);

  WorkResult r;
  r.path = WorkPath::TwoMeasurement;
  r.first = on_b;
  r.second = on_a;
  if (seed_a.homodyne) {
    // One-dimensional outcome statistics: entropies on the measured direction.
    const Eigen::Vector2d w(std::cos(seed_a.angle), std::sin(seed_a.angle));
    r.value = 0.5 * std::log(w.dot(sa * w) / w.dot(cond * w));
  } else {
    const Eigen::Matrix2d before = sa + seed_a.gamma;
    const Eigen::Matrix2d after = cond + seed_a.gamma;
    r.value = 0.5 * std::log(before.determinant() / after.determinant());
  }
  return r;
}

WorkResult work_two_measurements_avg(const CovarianceMatrix& sigma_ab, double lambda_b,
                                     double lambda_a, double tol) {
  check_strength(lambda_b);
  check_strength(lambda_a);
  WorkResult r;
  r.value = average_over_angles(
      [&](double phi, double theta) {
        return work_two_measurements(sigma_ab, GaussianMeasurement{lambda_b, phi, 1},
                                     GaussianMeasurement{lambda_a, theta, 0})
            .value;
      },
      tol);
  r.path = WorkPath::TwoMeasurement;
  r.averaged = true;
  return r;
}

double wehrl_mutual_info(const CovarianceMatrix& sigma_ab) {
  if (sigma_ab.modes() != 2)
    throw UnsupportedModeCount("wehrl_mutual_info needs a two-mode state");
  Matrix convolved = sigma_ab.entries() + 0.5 * Matrix::Identity(4, 4);
  SymplecticInvariants inv = two_mode_invariants(CovarianceMatrix(2, convolved));
  return 0.5 * std::log(inv.I1 * inv.I2 / inv.I4);
}

double renyi2_mutual_info(const CovarianceMatrix& sigma_ab) {
  SymplecticInvariants inv = two_mode_invariants(sigma_ab);
  return 0.5 * std::log(inv.I1 * inv.I2 / inv.I4);
}

WorkResult work_tripartite(const CovarianceMatrix& sigma_abc, const GaussianMeasurement& first,
                           const GaussianMeasurement& second) {
  if (sigma_abc.modes() != 3) throw UnsupportedModeCount("work_tripartite needs three modes");
  const int keeper = 3 - first.mode - second.mode;
  if (keeper < 0 || keeper > 2 || first.mode == second.mode)
    throw InvalidModeSet("the two demons must measure distinct modes of the three-mode state");

  const double det_before = sigma_abc.mode_determinant(keeper);
  const double det_after = conditional_tripartite(sigma_abc, first, second).det();

  WorkResult r;
  r.value = 0.5 * std::log(det_before / det_after);
  r.path = WorkPath::Tripartite;
  r.first = first;
  r.second = second;
  return r;
}

WorkResult work_tripartite_avg(const CovarianceMatrix& sigma_abc, double lambda_first,
                               double lambda_second, double tol) {
  check_strength(lambda_first);
  check_strength(lambda_second);
  WorkResult r;
  r.value = average_over_angles(
      [&](double phi_c, double phi_b) {
        return work_tripartite(sigma_abc, GaussianMeasurement{lambda_first, phi_c, 2},
                               GaussianMeasurement{lambda_second, phi_b, 1})
            .value;
      },
      tol);
  r.path = WorkPath::Tripartite;
  r.averaged = true;
  return r;
}

}  // namespace gausswork
