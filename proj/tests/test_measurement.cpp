#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"

using namespace gausswork;
using testutil::standard_form;

namespace {
constexpr double kPi = std::numbers::pi;

// One-shot Schur complement over the joint two-mode measured block, the
// block-matrix identity that sequential conditioning must reproduce.
Matrix one_shot_double_conditioning(const CovarianceMatrix& sigma, const GaussianMeasurement& m1,
                                    const GaussianMeasurement& m2) {
  Eigen::Matrix4d joint_seed = Eigen::Matrix4d::Zero();
  joint_seed.block<2, 2>(0, 0) = seed_covariance(m1).gamma;
  joint_seed.block<2, 2>(2, 2) = seed_covariance(m2).gamma;

  const int keep = 3 - m1.mode - m2.mode;
  Eigen::Matrix2d a = sigma.entries().block<2, 2>(2 * keep, 2 * keep);
  Eigen::Matrix<double, 2, 4> cross;
  cross.block<2, 2>(0, 0) = sigma.entries().block<2, 2>(2 * keep, 2 * m1.mode);
  cross.block<2, 2>(0, 2) = sigma.entries().block<2, 2>(2 * keep, 2 * m2.mode);
  Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
  b.block<2, 2>(0, 0) = sigma.entries().block<2, 2>(2 * m1.mode, 2 * m1.mode);
  b.block<2, 2>(0, 2) = sigma.entries().block<2, 2>(2 * m1.mode, 2 * m2.mode);
  b.block<2, 2>(2, 0) = sigma.entries().block<2, 2>(2 * m2.mode, 2 * m1.mode);
  b.block<2, 2>(2, 2) = sigma.entries().block<2, 2>(2 * m2.mode, 2 * m2.mode);

  Eigen::Matrix2d out = a - cross * (b + joint_seed).inverse() * cross.transpose();
  return Matrix(out);
}

}  // namespace

TEST_CASE("seed covariance shapes") {
  // Heterodyne is rotation invariant, bit for bit.
  SeedCovariance h1 = seed_covariance(GaussianMeasurement{1.0, 0.7, 1});
  SeedCovariance h2 = seed_covariance(GaussianMeasurement{1.0, 2.4, 1});
  CHECK((h1.gamma - h2.gamma).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h1.gamma(0, 0) == 0.5);
  CHECK(h1.gamma(0, 1) == 0.0);

  SeedCovariance strong = seed_covariance(GaussianMeasurement{5.0, 0.0, 1});
  CHECK(strong.gamma(0, 0) == doctest::Approx(2.5));
  CHECK(strong.gamma(1, 1) == doctest::Approx(0.1));

  for (double lam : {0.1, 2.0, 9.0})
    for (double phi : {0.0, 1.0, 2.0}) {
      SeedCovariance s = seed_covariance(GaussianMeasurement{lam, phi, 1});
      CHECK(s.gamma.determinant() == doctest::Approx(0.25).epsilon(1e-13));
    }
}

TEST_CASE("homodyne markers") {
  SeedCovariance s = seed_covariance(GaussianMeasurement{0.0, 0.3, 1});
  CHECK(s.homodyne);
  CHECK(s.angle == 0.3);

  // Infinite strength measures the orthogonal quadrature.
  SeedCovariance inf = seed_covariance(
      GaussianMeasurement{std::numeric_limits<double>::infinity(), 0.3, 1});
  CHECK(inf.homodyne);
  CHECK(inf.angle == doctest::Approx(0.3 + kPi / 2));

  CHECK_THROWS_AS(seed_covariance(GaussianMeasurement{-1.0, 0.0, 1}), InvalidParams);
}

TEST_CASE("bipartite conditioning matches the kernel examples") {
  CovarianceMatrix sigma(2, standard_form(3, 3, 2, -2));
  CovarianceMatrix het = conditional_bipartite(sigma, GaussianMeasurement::heterodyne());
  CHECK(het(0, 0) == doctest::Approx(13.0 / 7.0).epsilon(1e-14));

  CovarianceMatrix hom = conditional_bipartite(sigma, GaussianMeasurement::homodyne(0.0));
  CHECK(hom(0, 0) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(hom(1, 1) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("conditioning never increases the determinant") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> lam(0.0, 5.0);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  for (int i = 0; i < 10000; ++i) {
    CovarianceMatrix sigma = testutil::random_standard_form(rng);
    GaussianMeasurement m{i % 7 == 0 ? 0.0 : lam(rng), ang(rng), 1};
    CovarianceMatrix out = conditional_bipartite(sigma, m);
    CHECK(out.det() <= sigma.mode_determinant(0) * (1.0 + 1e-12));
  }
}

TEST_CASE("tripartite conditioning ignores uncorrelated demons") {
  Matrix m = Matrix::Zero(6, 6);
  m(0, 0) = m(1, 1) = 2.0;
  m(2, 2) = m(3, 3) = 1.5;
  m(4, 4) = m(5, 5) = 3.0;
  CovarianceMatrix sigma(3, m);
  CovarianceMatrix out = conditional_tripartite(sigma, GaussianMeasurement{1.0, 0.0, 2},
                                                GaussianMeasurement{0.5, 0.2, 1});
  CHECK((out.entries() - 2.0 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pure symmetric tripartite state conditions to a pure mode") {
  CovarianceMatrix sigma = build_symmetric_pure_tripartite(1.0);
  CovarianceMatrix out = conditional_tripartite(sigma, GaussianMeasurement::heterodyne(2),
                                                GaussianMeasurement::heterodyne(1));
  CHECK(out.det() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("tripartite conditioning commutes across demons") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> lam(0.05, 5.0);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  for (int i = 0; i < 300; ++i) {
    CovarianceMatrix sigma = testutil::random_general_tripartite(rng);
    GaussianMeasurement mb{i % 5 == 0 ? 0.0 : lam(rng), ang(rng), 1};
    GaussianMeasurement mc{i % 7 == 0 ? 0.0 : lam(rng), ang(rng), 2};
    CovarianceMatrix cb = conditional_tripartite(sigma, mc, mb);
    CovarianceMatrix bc = conditional_tripartite(sigma, mb, mc);
    CHECK((cb.entries() - bc.entries()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("sequential conditioning equals the one-shot joint Schur complement") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> lam(0.1, 10.0);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  for (int i = 0; i < 2000; ++i) {
    CovarianceMatrix sigma = testutil::random_general_tripartite(rng);
    GaussianMeasurement mc{lam(rng), ang(rng), 2};
    GaussianMeasurement mb{lam(rng), ang(rng), 1};
    CovarianceMatrix seq = conditional_tripartite(sigma, mc, mb);
    Matrix joint = one_shot_double_conditioning(sigma, mc, mb);
    CHECK((seq.entries() - joint).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("outcome covariance of two measurements") {
  // Uncorrelated thermal state, both heterodyne: vacuum convolution.
  CovarianceMatrix flat(2, standard_form(3, 3, 0, 0));
  OutcomeDistribution out = outcome_covariance_two_measurements(
      flat, GaussianMeasurement::heterodyne(1), GaussianMeasurement{1.0, 0.0, 0});
  CHECK_FALSE(out.one_dimensional);
  CHECK(out.covariance(0, 0) == doctest::Approx(3.5));
  CHECK(out.covariance(1, 1) == doctest::Approx(3.5));

  CovarianceMatrix sts(2, standard_form(3, 3, 2, -2));
  out = outcome_covariance_two_measurements(sts, GaussianMeasurement::heterodyne(1),
                                            GaussianMeasurement{1.0, 0.0, 0});
  CHECK(out.covariance(0, 0) == doctest::Approx(13.0 / 7.0 + 0.5).epsilon(1e-14));

  // Homodyne on the keeping side: one-dimensional statistics.
  out = outcome_covariance_two_measurements(sts, GaussianMeasurement::heterodyne(1),
                                            GaussianMeasurement::homodyne(0.0, 0));
  CHECK(out.one_dimensional);
  CHECK(out.variance == doctest::Approx(13.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("a further projective readout by the keeping party adds nothing") {
  // When the keeping party reads out both of her quadratures in sequence the
  // recorded information equals the full determinant drop, the same quantity
  // entering the state-entropy work. Verified against the invariant form.
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    CovarianceMatrix sigma = testutil::random_standard_form(rng);
    Eigen::Matrix2d sa = sigma.mode_block(0);

    // Her q readout, then p conditioned on the q record.
    const double var_q = sa(0, 0);
    const double var_p_given_q = sa(1, 1) - sa(0, 1) * sa(0, 1) / sa(0, 0);
    const double register_info = 0.5 * std::log(var_q * var_p_given_q);
    CHECK(register_info == doctest::Approx(0.5 * std::log(sa.determinant())).epsilon(1e-12));
  }
}
