#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gausswork/measurement.hpp"
#include "gausswork/states.hpp"

namespace gausswork {

/// Which route produced a work value.
enum class WorkPath {
  Generic,                // determinant ratio of the conditioning pipeline
  GenericAveraged,        // same, averaged over the measurement angle(s)
  ClosedSymmetric,        // closed form, symmetric squeezed thermal family
  ClosedSts,              // closed form, squeezed thermal family
  SeparableSymmetric,     // symmetric-family work at the separability threshold
  SeparableSts,           // squeezed-thermal work at the separability threshold
  SeparableGeneralBound,  // bound for general standard-form separable states
  TwoMeasurement,         // work from the outcome statistics of both demons
  Tripartite,             // three-mode conditioning pipeline
};

std::string work_path_name(WorkPath p);

/// Extractable work in units of k_B*T (natural log).
struct WorkResult {
  double value = 0.0;
  WorkPath path = WorkPath::Generic;
  bool averaged = false;
  std::optional<GaussianMeasurement> first;   // measurement on the other party
  std::optional<GaussianMeasurement> second;  // second measurement, when any
};

// ---------------------------------------------------------------------------
// Angle averages
// ---------------------------------------------------------------------------

/// Mean of a 2*pi-periodic function over one period, by trapezoidal sums with
/// node doubling until successive estimates differ by less than tol. Throws
/// QuadratureFailure when the cap is reached without convergence.
double average_over_angle(const std::function<double(double)>& f, double tol = 1e-10,
                          int max_nodes = 1 << 14);

/// Mean over the two-angle torus, product trapezoidal grid with doubling.
double average_over_angles(const std::function<double(double, double)>& f, double tol = 1e-10,
                           int max_nodes_per_dim = 1 << 11);

// ---------------------------------------------------------------------------
// Single measurement
// ---------------------------------------------------------------------------

/// Work extracted by the unmeasured party after one Gaussian measurement:
/// half the log-ratio of her reduced determinant before and after
/// conditioning. The equilibrium reference is her initial state.
WorkResult work_one_measurement(const CovarianceMatrix& sigma_ab, const GaussianMeasurement& on_b);

/// Angle average of work_one_measurement at fixed strength.
WorkResult work_avg_angle(const CovarianceMatrix& sigma_ab, double lambda, int measured_mode = 1,
                          double tol = 1e-10);

/// Closed form for the symmetric squeezed thermal family.
WorkResult work_symmetric_closed(double a, double c, double lambda);

/// Symmetric-family work at the separability threshold c = a - 1/2.
WorkResult work_sep_symmetric(double a, double lambda);

/// Work at maximal correlations (two-mode squeezed vacuum), ln 2a,
/// independent of the measurement strength.
double work_max_symmetric(double a);

/// Closed form for the squeezed thermal family.
WorkResult work_sts_closed(double a, double b, double c, double lambda);

/// Squeezed-thermal work at the separability threshold
/// c = sqrt((a-1/2)(b-1/2)).
WorkResult work_sep_sts(double a, double b, double lambda);

/// Squeezed-thermal work at maximal correlations; closed forms for homodyne
/// and heterodyne, the closed-form family expression at c_max otherwise.
double work_max_sts_homodyne(double a, double b);
double work_max_sts_heterodyne(double a, double b);
double work_max_sts(double a, double b, double lambda);

/// Angle-resolved work of the single-quadrature-correlated family (standard
/// form with d = 0) at its physicality-equals-separability boundary.
double separable_work_q_correlated(double a, double b, double lambda, double phi);

/// Upper bound on the angle-averaged work extractable from separable
/// standard-form states: the larger of the squeezed-thermal threshold value
/// and the angle average of the single-quadrature-correlated boundary value.
WorkResult separable_bound_general(double a, double b, double lambda, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Measurements on both parties
// ---------------------------------------------------------------------------

/// Work extracted from the classical record when both parties measure. For a
/// homodyne second measurement the outcome statistics are one-dimensional and
/// the entropies are taken on the projected direction.
WorkResult work_two_measurements(const CovarianceMatrix& sigma_ab, const GaussianMeasurement& on_b,
                                 const GaussianMeasurement& on_a);

/// Average of work_two_measurements over both measurement angles.
WorkResult work_two_measurements_avg(const CovarianceMatrix& sigma_ab, double lambda_b,
                                     double lambda_a, double tol = 1e-10);

/// Mutual information of the vacuum-convolved state sigma + (1/2) Identity,
/// from its symplectic invariants. Coincides with the double-heterodyne work.
double wehrl_mutual_info(const CovarianceMatrix& sigma_ab);

/// Renyi-2 mutual information, (1/2) ln(I1 I2 / I4). Equals the total work of
/// two orthogonal homodyne conditionings on the same mode.
double renyi2_mutual_info(const CovarianceMatrix& sigma_ab);

// ---------------------------------------------------------------------------
// Three modes
// ---------------------------------------------------------------------------

/// Work extracted by mode 0 after the two other parties measure.
WorkResult work_tripartite(const CovarianceMatrix& sigma_abc, const GaussianMeasurement& first,
                           const GaussianMeasurement& second);

/// Average of work_tripartite over both demons' angles at fixed strengths.
WorkResult work_tripartite_avg(const CovarianceMatrix& sigma_abc, double lambda_first,
                               double lambda_second, double tol = 1e-10);

}  // namespace gausswork
