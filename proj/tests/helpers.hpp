#pragma once

#include <cmath>
#include <random>

#include "gausswork/measurement.hpp"
#include "gausswork/sampling.hpp"
#include "gausswork/states.hpp"
#include "gausswork/symplectic.hpp"
#include "gausswork/work.hpp"

// Shared oracles and random-state generators for the test suites. Everything
// here stays independent of the library code paths it is used to check:
// symplectic spectra come from the invariant formulas, conditioning limits
// from small finite strengths, and random draws from std::mt19937_64.
namespace testutil {

using gausswork::CovarianceMatrix;
using gausswork::Matrix;

// Two-mode symplectic spectrum from the invariants:
// nu^2 = (Delta +/- sqrt(Delta^2 - 4 I4)) / 2.
inline std::pair<double, double> nu_from_invariants(const CovarianceMatrix& sigma) {
  const auto inv = gausswork::two_mode_invariants(sigma);
  const double delta = inv.Delta();
  const double disc = std::sqrt(std::max(delta * delta - 4.0 * inv.I4, 0.0));
  return {std::sqrt((delta + disc) / 2.0), std::sqrt(std::max((delta - disc) / 2.0, 0.0))};
}

inline Matrix standard_form(double a, double b, double c, double d) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = a;
  m(2, 2) = m(3, 3) = b;
  m(0, 2) = m(2, 0) = c;
  m(1, 3) = m(3, 1) = d;
  return m;
}

inline CovarianceMatrix random_symmetric_sts(std::mt19937_64& rng, double a_lo = 0.5,
                                             double a_hi = 5.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double a = a_lo + (a_hi - a_lo) * u(rng);
  const double c = gausswork::c_max_symmetric(a) * u(rng);
  return CovarianceMatrix(2, standard_form(a, a, c, -c));
}

inline CovarianceMatrix random_sts(std::mt19937_64& rng, double lo = 0.5, double hi = 5.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double a = lo + (hi - lo) * u(rng);
    const double b = lo + (hi - lo) * u(rng);
    const double c = gausswork::c_box_sts(a, b) * u(rng);
    CovarianceMatrix sigma(2, standard_form(a, b, c, -c));
    if (gausswork::is_physical(sigma)) return sigma;
  }
}

inline CovarianceMatrix random_standard_form(std::mt19937_64& rng, double lo = 0.5,
                                             double hi = 5.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> v(0.0, 1.0);
  for (;;) {
    const double a = lo + (hi - lo) * v(rng);
    const double b = lo + (hi - lo) * v(rng);
    const double box = gausswork::c_box_sts(a, b);
    const double c = box * u(rng);
    const double d = box * u(rng);
    CovarianceMatrix sigma(2, standard_form(a, b, c, d));
    if (gausswork::is_physical(sigma)) return sigma;
  }
}

inline CovarianceMatrix random_general_tripartite(std::mt19937_64& rng, double local_hi = 3.0,
                                                  double corr = 2.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> v(0.0, 1.0);
  for (;;) {
    gausswork::GeneralTripartiteParams p;
    p.a = 0.5 + (local_hi - 0.5) * v(rng);
    p.b = 0.5 + (local_hi - 0.5) * v(rng);
    p.c = 0.5 + (local_hi - 0.5) * v(rng);
    for (double& x : p.corr) x = corr * u(rng);
    try {
      return gausswork::build_general_tripartite(p);
    } catch (const gausswork::Unphysical&) {
    }
  }
}

}  // namespace testutil
