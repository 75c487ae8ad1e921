#include "gausswork/states.hpp"

#include <algorithm>
#include <cmath>

namespace gausswork {

namespace {

// Validity slack on closed-form parameter bounds; matches the physicality
// tolerance so boundary states (e.g. two-mode squeezed vacua) are accepted.
constexpr double kBoundSlack = 1e-9;

Matrix standard_form_matrix(double a, double b, double c, double d) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = a;
  m(2, 2) = m(3, 3) = b;
  m(0, 2) = m(2, 0) = c;
  m(1, 3) = m(3, 1) = d;
  return m;
}

}  // namespace

double c_sep_symmetric(double a) { return a - 0.5; }

double c_sep_sts(double a, double b) { return std::sqrt((a - 0.5) * (b - 0.5)); }

double c_max_symmetric(double a) { return std::sqrt(a * a - 0.25); }

double c_max_sts(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return std::sqrt((hi + 0.5) * (lo - 0.5));
}

double c_box_sts(double a, double b) {
  return std::sqrt(std::max((a + 0.5) * (b - 0.5), (a - 0.5) * (b + 0.5)));
}

double c_max_q_correlated(double a, double b) {
  return std::sqrt((4.0 * a * a - 1.0) * (4.0 * b * b - 1.0) / (16.0 * a * b));
}

CovarianceMatrix build_two_mode(const TwoModeStandardForm& p) {
  if (p.a < 0.5 || p.b < 0.5)
    throw Unphysical("local variances must satisfy a >= 1/2 and b >= 1/2");
  CovarianceMatrix sigma(2, standard_form_matrix(p.a, p.b, p.c, p.d));
  if (!is_physical(sigma))
    throw Unphysical("standard-form parameters give a smallest symplectic eigenvalue below 1/2");
  return sigma;
}

CovarianceMatrix build_two_mode(const SqueezedThermalParams& p) {
  if (p.a < 0.5 || p.b < 0.5)
    throw Unphysical("local variances must satisfy a >= 1/2 and b >= 1/2");
  if (std::abs(p.c) > c_max_sts(p.a, p.b) + kBoundSlack)
    throw Unphysical(
        "squeezed thermal state requires |c| <= sqrt((max(a,b)+1/2)(min(a,b)-1/2))");
  return CovarianceMatrix(2, standard_form_matrix(p.a, p.b, p.c, -p.c));
}

CovarianceMatrix build_two_mode(const SymmetricStsParams& p) {
  if (p.a < 0.5) throw Unphysical("local variance must satisfy a >= 1/2");
  if (std::abs(p.c) > c_max_symmetric(p.a) + kBoundSlack)
    throw Unphysical("symmetric squeezed thermal state requires |c| <= sqrt(a^2 - 1/4)");
  return CovarianceMatrix(2, standard_form_matrix(p.a, p.a, p.c, -p.c));
}

namespace {

// Correlation entries of the pure three-mode standard form for the pair of
// local variances (i, j), with k the variance of the remaining mode. Returns
// false when a discriminant is negative.
bool pure_pair_correlations(double i, double j, double k, double& plus, double& minus) {
  const double dm = 4.0 * (i - j) * (i - j);
  const double dp = 4.0 * (i + j) * (i + j);
  const double km = (2.0 * k - 1.0) * (2.0 * k - 1.0);
  const double kp = (2.0 * k + 1.0) * (2.0 * k + 1.0);
  double disc1 = (dm - km) * (dm - kp);
  double disc2 = (dp - km) * (dp - kp);
  const double scale = std::max({1.0, dm, dp, kp});
  if (disc1 < -1e-12 * scale * scale || disc2 < -1e-12 * scale * scale) return false;
  disc1 = std::max(disc1, 0.0);
  disc2 = std::max(disc2, 0.0);
  const double denom = 16.0 * std::sqrt(i * j);
  plus = (std::sqrt(disc1) + std::sqrt(disc2)) / denom;
  minus = (std::sqrt(disc1) - std::sqrt(disc2)) / denom;
  return true;
}

bool assemble_pure_tripartite(const PureTripartiteParams& p, Matrix& m) {
  double ab_p, ab_m, ac_p, ac_m, bc_p, bc_m;
  if (!pure_pair_correlations(p.a, p.b, p.c, ab_p, ab_m)) return false;
  if (!pure_pair_correlations(p.a, p.c, p.b, ac_p, ac_m)) return false;
  if (!pure_pair_correlations(p.b, p.c, p.a, bc_p, bc_m)) return false;

  m = Matrix::Zero(6, 6);
  m(0, 0) = m(1, 1) = p.a;
  m(2, 2) = m(3, 3) = p.b;
  m(4, 4) = m(5, 5) = p.c;
  m(0, 2) = m(2, 0) = ab_p;
  m(1, 3) = m(3, 1) = ab_m;
  m(0, 4) = m(4, 0) = ac_p;
  m(1, 5) = m(5, 1) = ac_m;
  m(2, 4) = m(4, 2) = bc_p;
  m(3, 5) = m(5, 3) = bc_m;
  return true;
}

}  // namespace

bool pure_tripartite_valid(const PureTripartiteParams& p) {
  if (p.a < 0.5 || p.b < 0.5 || p.c < 0.5) return false;
  Matrix m;
  if (!assemble_pure_tripartite(p, m)) return false;
  // Purity puts these states on the physicality boundary, so allow the purity
  // tolerance rather than the default one.
  return is_physical(CovarianceMatrix(3, m), 1e-8);
}

CovarianceMatrix build_pure_tripartite(const PureTripartiteParams& p) {
  if (p.a < 0.5 || p.b < 0.5 || p.c < 0.5)
    throw InvalidTriple("local variances must all be >= 1/2");
  Matrix m;
  if (!assemble_pure_tripartite(p, m))
    throw InvalidTriple("local variances give a negative discriminant in the correlation formula");
  CovarianceMatrix sigma(3, m);
  if (!is_physical(sigma, 1e-8))
    throw Unphysical("local variances do not admit a pure three-mode state");
  return sigma;
}

CovarianceMatrix build_symmetric_pure_tripartite(double a) {
  if (a < 0.5) throw InvalidTriple("local variance must be >= 1/2");
  const double root = std::sqrt((4.0 * a * a - 1.0) * (36.0 * a * a - 1.0));
  const double cp = (4.0 * a * a - 1.0 + root) / (16.0 * a);
  const double cm = (4.0 * a * a - 1.0 - root) / (16.0 * a);

  Matrix m = Matrix::Zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    m(2 * i, 2 * i) = m(2 * i + 1, 2 * i + 1) = a;
    for (int j = i + 1; j < 3; ++j) {
      m(2 * i, 2 * j) = m(2 * j, 2 * i) = cp;
      m(2 * i + 1, 2 * j + 1) = m(2 * j + 1, 2 * i + 1) = cm;
    }
  }
  return CovarianceMatrix(3, m);
}

CovarianceMatrix build_symmetric_mixed_tripartite(double a) {
  if (a < 0.5) throw Unphysical("local variance must be >= 1/2");
  const double root = std::sqrt(36.0 * a * a * (4.0 * a * a - 2.0) + 25.0);
  const double cp = (4.0 * a * a - 5.0 + root) / (16.0 * a);
  const double cm = (5.0 - 36.0 * a * a + root) / (48.0 * a);

  Matrix m = Matrix::Zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    m(2 * i, 2 * i) = m(2 * i + 1, 2 * i + 1) = a;
    for (int j = i + 1; j < 3; ++j) {
      m(2 * i, 2 * j) = m(2 * j, 2 * i) = cp;
      m(2 * i + 1, 2 * j + 1) = m(2 * j + 1, 2 * i + 1) = cm;
    }
  }
  return CovarianceMatrix(3, m);
}

CovarianceMatrix build_general_tripartite(const GeneralTripartiteParams& p) {
  if (p.a < 0.5 || p.b < 0.5 || p.c < 0.5)
    throw Unphysical("local variances must all be >= 1/2");
  const auto& c = p.corr;
  Matrix m(6, 6);
  // Layout of the twelve-parameter standard form; rows (qa,pa,qb,pb,qc,pc).
  m << p.a, 0, c[0], 0, c[2], c[4],
       0, p.a, 0, c[1], 0, c[3],
       c[0], 0, p.b, 0, c[5], c[7],
       0, c[1], 0, p.b, c[8], c[6],
       c[2], 0, c[5], c[8], p.c, 0,
       c[4], c[3], c[7], c[6], 0, p.c;
  CovarianceMatrix sigma(3, m);
  if (!is_physical(sigma))
    throw Unphysical("correlation parameters give a smallest symplectic eigenvalue below 1/2");
  return sigma;
}

std::string SeparabilityVerdict::class_label() const {
  if (n_modes == 2) return entangled ? "entangled" : "separable";
  switch (*tri_class) {
    case TripartiteClass::FullyInseparable:
      return "i";
    case TripartiteClass::OneBiseparable:
      return "ii";
    case TripartiteClass::TwoBiseparable:
      return "iii";
    case TripartiteClass::ThreeBiseparable:
      return "iv";
  }
  return "?";
}

SeparabilityVerdict classify(const CovarianceMatrix& sigma, double tol) {
  const int n = sigma.modes();
  if (n != 2 && n != 3)
    throw UnsupportedModeCount("classification supports two- and three-mode states only");

  SeparabilityVerdict verdict;
  verdict.n_modes = n;

  auto ppt_of = [&](int mode) {
    const int m[1] = {mode};
    BipartitionPpt r;
    r.transposed_mode = mode;
    r.nu_min = min_symplectic_eigenvalue(partial_transpose(sigma, m));
    r.separable = r.nu_min >= kVacuumVariance - tol;
    return r;
  };

  if (n == 2) {
    BipartitionPpt r = ppt_of(1);
    verdict.bipartitions.push_back(r);
    verdict.entangled = !r.separable;
    return verdict;
  }

  int npt = 0;
  for (int mode = 0; mode < 3; ++mode) {
    BipartitionPpt r = ppt_of(mode);
    if (!r.separable) ++npt;
    verdict.bipartitions.push_back(r);
  }
  switch (npt) {
    case 3:
      verdict.tri_class = TripartiteClass::FullyInseparable;
      break;
    case 2:
      verdict.tri_class = TripartiteClass::OneBiseparable;
      break;
    case 1:
      verdict.tri_class = TripartiteClass::TwoBiseparable;
      break;
    default:
      verdict.tri_class = TripartiteClass::ThreeBiseparable;
      break;
  }
  verdict.entangled = npt > 0;
  return verdict;
}

}  // namespace gausswork
