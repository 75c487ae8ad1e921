#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"

using namespace gausswork;
using testutil::standard_form;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rotation matrix basics") {
  CHECK(rotation(0.0).isIdentity(0.0));

  Eigen::Matrix2d quarter = rotation(kPi / 2);
  CHECK(quarter(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(quarter(0, 1) == doctest::Approx(-1.0));
  CHECK(quarter(1, 0) == doctest::Approx(1.0));
  CHECK(quarter(1, 1) == doctest::Approx(0.0).epsilon(1e-15));

  Eigen::Matrix2d prod = rotation(0.37) * rotation(-0.37);
  CHECK((prod - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(rotation(1.234).determinant() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symplectic eigenvalues of simple states") {
  CHECK(symplectic_eigenvalues(CovarianceMatrix::vacuum(1))[0] == doctest::Approx(0.5));

  Matrix thermal = 3.0 * Matrix::Identity(2, 2);
  CHECK(symplectic_eigenvalues(CovarianceMatrix(1, thermal))[0] == doctest::Approx(3.0));

  // Correlations diag(c, c): spectrum {a + c, a - c}.
  CovarianceMatrix plus(2, standard_form(3, 3, 2, 2));
  auto nu = symplectic_eigenvalues(plus);
  CHECK(nu[0] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(nu[1] == doctest::Approx(1.0).epsilon(1e-12));

  // Correlations diag(c, -c): doubly degenerate sqrt(a^2 - c^2).
  CovarianceMatrix sts(2, standard_form(3, 3, 2, -2));
  nu = symplectic_eigenvalues(sts);
  CHECK(nu[0] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(nu[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("symplectic eigenvalues match the invariant formula on random two-mode states") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 500; ++i) {
    CovarianceMatrix sigma = testutil::random_standard_form(rng);
    auto nu = symplectic_eigenvalues(sigma);
    auto [hi, lo] = testutil::nu_from_invariants(sigma);
    CHECK(nu[0] == doctest::Approx(hi).epsilon(1e-9));
    CHECK(nu[1] == doctest::Approx(lo).epsilon(1e-9));
  }
}

TEST_CASE("symplectic eigenvalues reject non positive definite input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = -3.0;
  m(1, 1) = -3.0;
  CHECK_THROWS_AS(symplectic_eigenvalues(CovarianceMatrix(1, m)), NonPositiveDefinite);
}

TEST_CASE("physicality check") {
  CHECK(is_physical(CovarianceMatrix(2, standard_form(3, 3, 2.9, -2.9))));
  CHECK_FALSE(is_physical(CovarianceMatrix(2, standard_form(3, 3, 3.0, -3.0))));

  Matrix below = 0.4 * Matrix::Identity(2, 2);
  CHECK_FALSE(is_physical(CovarianceMatrix(1, below)));

  // Boundary state: smallest eigenvalue exactly 1/2 must pass.
  const double cmax = c_max_symmetric(3.0);
  CHECK(is_physical(CovarianceMatrix(2, standard_form(3, 3, cmax, -cmax))));
}

TEST_CASE("partial transpose flips the squeezed thermal spectrum") {
  CovarianceMatrix sep(2, standard_form(3, 3, 2.0, -2.0));
  const int mode_b[1] = {1};
  // c below the separability threshold a - 1/2: transposed state stays physical.
  CHECK(min_symplectic_eigenvalue(partial_transpose(sep, mode_b)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CovarianceMatrix ent(2, standard_form(3, 3, 2.8, -2.8));
  CHECK(min_symplectic_eigenvalue(partial_transpose(ent, mode_b)) ==
        doctest::Approx(0.2).epsilon(1e-10));
}

TEST_CASE("partial transpose is an involution and preserves the determinant") {
  std::mt19937_64 rng(7);
  const int mode_b[1] = {1};
  for (int i = 0; i < 200; ++i) {
    CovarianceMatrix sigma = testutil::random_standard_form(rng);
    CovarianceMatrix once = partial_transpose(sigma, mode_b);
    CovarianceMatrix twice = partial_transpose(once, mode_b);
    CHECK((twice.entries() - sigma.entries()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(once.det() == sigma.det());
  }
  for (int i = 0; i < 50; ++i) {
    CovarianceMatrix sigma = testutil::random_general_tripartite(rng);
    for (int m = 0; m < 3; ++m) {
      const int modes[1] = {m};
      CovarianceMatrix once = partial_transpose(sigma, modes);
      CHECK((partial_transpose(once, modes).entries() - sigma.entries()).cwiseAbs().maxCoeff() ==
            0.0);
      CHECK(once.det() == doctest::Approx(sigma.det()).epsilon(1e-13));
    }
  }
}

TEST_CASE("partial transpose rejects empty and full mode sets") {
  CovarianceMatrix sigma = CovarianceMatrix::vacuum(2);
  CHECK_THROWS_AS(partial_transpose(sigma, std::span<const int>{}), InvalidModeSet);
  const int all[2] = {0, 1};
  CHECK_THROWS_AS(partial_transpose(sigma, all), InvalidModeSet);
  const int bad[1] = {5};
  CHECK_THROWS_AS(partial_transpose(sigma, bad), InvalidModeSet);
}

TEST_CASE("renyi-2 entropy") {
  CHECK(renyi2_entropy(CovarianceMatrix::vacuum(1)) == doctest::Approx(-std::log(2.0)));

  Matrix t = 3.0 * Matrix::Identity(2, 2);
  CHECK(renyi2_entropy(CovarianceMatrix(1, t)) == doctest::Approx(std::log(3.0)));

  // Additivity on a block-diagonal product state.
  Matrix prod = Matrix::Zero(4, 4);
  prod(0, 0) = prod(1, 1) = 3.0;
  prod(2, 2) = prod(3, 3) = 2.0;
  CHECK(renyi2_entropy(CovarianceMatrix(2, prod)) ==
        doctest::Approx(std::log(3.0) + std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("renyi-2 additivity is exact on random direct sums") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int i = 0; i < 100; ++i) {
    double v1 = u(rng), v2 = u(rng), v3 = u(rng);
    Matrix m = Matrix::Zero(6, 6);
    m(0, 0) = m(1, 1) = v1;
    m(2, 2) = m(3, 3) = v2;
    m(4, 4) = m(5, 5) = v3;
    CHECK(renyi2_entropy(CovarianceMatrix(3, m)) ==
          doctest::Approx(std::log(v1) + std::log(v2) + std::log(v3)).epsilon(1e-12));
  }
}

TEST_CASE("conditioning leaves uncorrelated states untouched") {
  CovarianceMatrix sigma(2, standard_form(3, 3, 0, 0));
  SeedCovariance het{false, 0.0, 0.5 * Eigen::Matrix2d::Identity()};
  CovarianceMatrix out = condition_on_measurement(sigma, 1, het);
  CHECK((out.entries() - 3.0 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conditioning closed-form checks on the symmetric squeezed thermal state") {
  CovarianceMatrix sigma(2, standard_form(3, 3, 2, -2));

  SeedCovariance het{false, 0.0, 0.5 * Eigen::Matrix2d::Identity()};
  CovarianceMatrix out = condition_on_measurement(sigma, 1, het);
  CHECK(out(0, 0) == doctest::Approx(13.0 / 7.0).epsilon(1e-14));
  CHECK(out(1, 1) == doctest::Approx(13.0 / 7.0).epsilon(1e-14));
  CHECK(out(0, 1) == doctest::Approx(0.0).epsilon(1e-15));

  SeedCovariance hom{true, 0.0, Eigen::Matrix2d::Zero()};
  out = condition_on_measurement(sigma, 1, hom);
  CHECK(out(0, 0) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(out(1, 1) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("homodyne conditioning agrees with the small-strength limit") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    CovarianceMatrix sigma = testutil::random_standard_form(rng);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    const double phi = ang(rng);

    CovarianceMatrix exact =
        condition_on_measurement(sigma, 1, SeedCovariance{true, phi, Eigen::Matrix2d::Zero()});
    CovarianceMatrix approx = condition_on_measurement(
        sigma, 1, seed_covariance(GaussianMeasurement{1e-8, phi, 1}));
    CHECK((exact.entries() - approx.entries()).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("conditioned states stay physical across strengths and angles") {
  std::mt19937_64 rng(31);
  const double strengths[] = {0.0, 1e-3, 0.1, 1.0, 10.0, 1e3};
  const int n_states = 10000;
  int failures = 0;
  for (int i = 0; i < n_states; ++i) {
    CovarianceMatrix sigma = (i % 2 == 0) ? testutil::random_standard_form(rng)
                                          : testutil::random_sts(rng);
    for (double lam : strengths) {
      for (int k = 0; k < 16; ++k) {
        const double phi = 2 * kPi * k / 16;
        CovarianceMatrix out =
            condition_on_measurement(sigma, 1, seed_covariance(GaussianMeasurement{lam, phi, 1}));
        if (!is_physical(out, 1e-9)) ++failures;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("conditioning on a degenerate direction throws") {
  // Zero variance along the measured quadrature cannot happen for physical
  // states; force it with a raw matrix.
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 2) = 0.0;  // q_b variance zero
  m(3, 3) = 1.0;
  CovarianceMatrix sigma(2, m);
  CHECK_THROWS_AS(condition_on_measurement(sigma, 1, SeedCovariance{true, 0.0, {}}),
                  SingularConditioning);
}
