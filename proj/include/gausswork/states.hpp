#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gausswork/symplectic.hpp"

namespace gausswork {

// ---------------------------------------------------------------------------
// Family parameter records
// ---------------------------------------------------------------------------

/// General two-mode standard form: diagonal local blocks diag(a,a), diag(b,b)
/// and correlation block diag(c,d).
struct TwoModeStandardForm {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c = 0.0;
  double d = 0.0;
};

/// Squeezed thermal state: standard form with d = -c.
struct SqueezedThermalParams {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c = 0.0;
};

/// Symmetric squeezed thermal state: d = -c and b = a.
struct SymmetricStsParams {
  double a = kVacuumVariance;
  double c = 0.0;
};

/// Pure three-mode state, parametrized by the local variances alone.
struct PureTripartiteParams {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c = kVacuumVariance;
};

/// General three-mode standard form: local variances a, b, c plus the nine
/// independent correlation entries c1..c9.
struct GeneralTripartiteParams {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c = kVacuumVariance;
  std::array<double, 9> corr{};
};

// ---------------------------------------------------------------------------
// Thresholds and bounds on the correlation parameter
// ---------------------------------------------------------------------------

/// Separability threshold of the symmetric squeezed thermal family, a - 1/2.
double c_sep_symmetric(double a);

/// Separability threshold of the squeezed thermal family,
/// sqrt((a - 1/2)(b - 1/2)).
double c_sep_sts(double a, double b);

/// Largest physical correlation of the symmetric family, sqrt(a^2 - 1/4)
/// (a two-mode squeezed vacuum).
double c_max_symmetric(double a);

/// Largest physical correlation of the squeezed thermal family,
/// sqrt((max(a,b) + 1/2)(min(a,b) - 1/2)).
double c_max_sts(double a, double b);

/// Loose rectangular bound max{sqrt((a+1/2)(b-1/2)), sqrt((a-1/2)(b+1/2))}
/// used as a sampling box; not every value inside it is physical.
double c_box_sts(double a, double b);

/// Boundary correlation of the single-quadrature-correlated family
/// (standard form with d = 0), sqrt((4a^2-1)(4b^2-1)/(16ab)). For that
/// family the physicality and separability boundaries coincide.
double c_max_q_correlated(double a, double b);

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// Assemble the 4x4 standard-form matrix. Throws Unphysical when the
/// parameters do not describe a quantum state; the message names the violated
/// bound where a closed-form bound exists.
CovarianceMatrix build_two_mode(const TwoModeStandardForm& p);
CovarianceMatrix build_two_mode(const SqueezedThermalParams& p);
CovarianceMatrix build_two_mode(const SymmetricStsParams& p);

/// True when the three local variances admit a pure three-mode state (all
/// discriminants of the correlation formula nonnegative and the assembled
/// matrix physical).
bool pure_tripartite_valid(const PureTripartiteParams& p);

/// Standard form of a pure three-mode state. Throws InvalidTriple when a
/// discriminant is negative, Unphysical when the matrix fails the physicality
/// check.
CovarianceMatrix build_pure_tripartite(const PureTripartiteParams& p);

/// Permutation-symmetric pure family (the a = b = c member of the pure
/// standard form, with correlations picked to maximize entanglement).
CovarianceMatrix build_symmetric_pure_tripartite(double a);

/// Fully symmetric mixed three-mode family: no two-mode entanglement,
/// factorized at a = 1/2, fully inseparable for a > 1/2.
CovarianceMatrix build_symmetric_mixed_tripartite(double a);

CovarianceMatrix build_general_tripartite(const GeneralTripartiteParams& p);

// ---------------------------------------------------------------------------
// PPT classification
// ---------------------------------------------------------------------------

enum class TripartiteClass {
  FullyInseparable = 1,  // no PPT bipartition
  OneBiseparable = 2,    // PPT under exactly one bipartition
  TwoBiseparable = 3,    // PPT under exactly two
  ThreeBiseparable = 4,  // PPT under all three
};

struct BipartitionPpt {
  int transposed_mode = 0;   // mode singled out by the bipartition
  double nu_min = 0.0;       // smallest symplectic eigenvalue after transposition
  bool separable = false;    // nu_min >= 1/2 (up to the physicality tolerance)
};

struct SeparabilityVerdict {
  int n_modes = 0;
  bool entangled = false;                           // two-mode verdict
  std::optional<TripartiteClass> tri_class;         // three-mode verdict
  std::vector<BipartitionPpt> bipartitions;

  /// "separable" / "entangled" for two modes, "i".."iv" for three.
  std::string class_label() const;
};

/// PPT test across every 1-vs-rest bipartition. For the Gaussian families
/// handled here PPT is necessary and sufficient, so the two-mode verdict and
/// the three-mode class count are exact. Throws UnsupportedModeCount unless
/// the state has 2 or 3 modes.
SeparabilityVerdict classify(const CovarianceMatrix& sigma, double tol = kPhysicalTol);

}  // namespace gausswork
