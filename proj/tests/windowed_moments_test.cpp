#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ringspread/circle_state.hpp"
#include "ringspread/errors.hpp"
#include "ringspread/windowed_moments.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace ringspread {
namespace {

using testing::kPiSq;

TEST(WindowMean, PsiSClosedForm) {
  const CircleState s = make_trig(1, TrigPhase::Sin);
  EXPECT_NEAR(mean_phi(s, 0.0), 0.0, 1e-14);
  EXPECT_NEAR(mean_phi(s, kPi / 4), kPi / 4 - 0.5, 1e-13);
  for (double phi0 : testing::random_angles(20)) EXPECT_NEAR(mean_phi(s, phi0), testing::psi_s_mean(phi0), 1e-12);
}

TEST(WindowMean, UniformIsIdentity) {
  const CircleState s = make_eigenstate(0);
  for (double phi0 : {-3.0, -0.7, 0.0, 1.0, 2.5}) EXPECT_NEAR(mean_phi(s, phi0), phi0, 1e-13);
}

TEST(WindowVariance, UniformIsPiSquaredOverThree) {
  for (int m : {0, 3, -7}) {
    const CircleState s = make_eigenstate(m);
    for (double phi0 : {-2.0, 0.0, 0.6}) EXPECT_NEAR(variance_phi(s, phi0), kPiSq / 3, 1e-12);
  }
}

TEST(WindowVariance, PsiSClosedForm) {
  const CircleState s = make_trig(1, TrigPhase::Sin);
  EXPECT_NEAR(variance_phi(s, 0.0), kPiSq / 3 - 0.5, 1e-12);
  EXPECT_NEAR(variance_phi(s, kPi / 2), kPiSq / 3 + 0.5, 1e-12);
  for (double phi0 : testing::random_angles(20, 3)) {
    EXPECT_NEAR(variance_phi(s, phi0), testing::psi_s_variance(phi0), 1e-12);
  }
}

TEST(WindowVariance, PsiS2ClosedForm) {
  const CircleState s = make_trig(2, TrigPhase::Sin);
  for (double phi0 : testing::random_angles(20, 4)) {
    EXPECT_NEAR(mean_phi(s, phi0), testing::psi_s2_mean(phi0), 1e-12);
    EXPECT_NEAR(variance_phi(s, phi0), testing::psi_s2_variance(phi0), 1e-12);
  }
}

TEST(CentralMoment, UniformOddVanishesEvenIsPower) {
  const CircleState s = make_eigenstate(0);
  EXPECT_NEAR(central_moment_phi(s, 3, 0.0), 0.0, 1e-12);
  EXPECT_NEAR(central_moment_phi(s, 4, 0.0), std::pow(kPi, 4) / 5, 1e-11);
  EXPECT_NEAR(central_moment_phi(s, 2, 1.0), kPiSq / 3, 1e-12);
  EXPECT_NEAR(central_moment_phi(s, 1, 1.0), 0.0, 1e-12);
  EXPECT_THROW(central_moment_phi(s, 0, 0.0), ParameterRangeError);
  EXPECT_THROW(central_moment_phi(s, 9, 0.0), ParameterRangeError);
}

TEST(CentralMoment, MatchesBruteForceOnCorpus) {
  for (const auto& s : testing::random_corpus(4, 17)) {
    const double phi0 = 0.4;
    const double mean = mean_phi(s, phi0);
    for (int order : {3, 4, 6}) {
      const double want = testing::simpson(
          [&](double x) { return std::pow(x - mean, order) * testing::oracle_density(s, x); }, phi0 - kPi,
          phi0 + kPi, 8000);
      EXPECT_NEAR(central_moment_phi(s, order, phi0), want, 1e-9 * std::max(1.0, std::abs(want)))
          << s.label() << " order " << order;
    }
  }
}

TEST(Covariance, EigenstateHasOnlyBoundaryTerm) {
  const auto g = covariance_lz_phi(make_eigenstate(2), 0.0);
  EXPECT_NEAR(g.real(), 0.0, 1e-13);
  EXPECT_NEAR(g.imag(), 0.0, 1e-13);
}

TEST(Covariance, PsiSAtZero) {
  // Density at the window edge is zero, so Im G = -1/2.
  const auto g = covariance_lz_phi(make_trig(1, TrigPhase::Sin), 0.0);
  EXPECT_NEAR(g.real(), 0.0, 1e-13);
  EXPECT_NEAR(g.imag(), -0.5, 1e-13);
}

TEST(Covariance, ImaginaryPartBoundaryOracle) {
  for (const auto& s : testing::random_corpus(10)) {
    for (double phi0 : testing::random_angles(12)) {
      EXPECT_NEAR(covariance_lz_phi(s, phi0).imag(), testing::oracle_im_g(s, phi0), 1e-10) << s.label();
    }
  }
}

TEST(DualPath, ClosedFormMatchesQuadrature) {
  auto states = testing::random_corpus(8, 31);
  for (const auto& s : testing::catalog_states()) states.push_back(s);
  for (const auto& s : states) {
    const WindowedMoments wm(s);
    for (double phi0 : {-2.9, -0.3, 0.0, 1.7}) {
      const WindowMoments a = wm.at(phi0);
      const WindowMoments b = window_moments_by_quadrature(s, phi0);
      EXPECT_NEAR(a.mean, b.mean, 1e-8) << s.label();
      EXPECT_NEAR(a.variance, b.variance, 1e-8) << s.label();
      EXPECT_NEAR(a.cov_re, b.cov_re, 1e-8) << s.label();
      EXPECT_NEAR(a.cov_im, b.cov_im, 1e-8) << s.label();
    }
  }
}

TEST(DualPath, MatchesSimpsonOracle) {
  for (const auto& s : testing::random_corpus(3, 41)) {
    const auto w = testing::oracle_window(s, 0.9);
    EXPECT_NEAR(mean_phi(s, 0.9), w.mean, 1e-9);
    EXPECT_NEAR(variance_phi(s, 0.9), w.variance, 1e-9);
  }
}

TEST(Properties, Periodicity) {
  for (const auto& s : testing::random_corpus(10, 5)) {
    const WindowedMoments wm(s);
    for (double phi0 : testing::random_angles(12, 9)) {
      EXPECT_NEAR(wm.variance(phi0 + kTwoPi), wm.variance(phi0), 1e-9);
      EXPECT_NEAR(wm.mean(phi0 + kTwoPi), wm.mean(phi0) + kTwoPi, 1e-9);
      const auto g0 = wm.covariance(phi0);
      const auto g1 = wm.covariance(phi0 + kTwoPi);
      EXPECT_NEAR(std::abs(g1 - g0), 0.0, 1e-9);
    }
  }
}

TEST(Properties, MeanInsideWindowAndVarianceBounded) {
  for (const auto& s : testing::random_corpus(10, 6)) {
    const WindowedMoments wm(s);
    for (double phi0 : testing::random_angles(12, 10)) {
      const double m = wm.mean(phi0);
      EXPECT_GE(m, phi0 - kPi);
      EXPECT_LE(m, phi0 + kPi);
      const double d = wm.variance(phi0);
      EXPECT_GE(d, 0.0);
      EXPECT_LE(d, kPiSq);
    }
  }
}

TEST(PeriodicObservables, ExpectationOfExponential) {
  const CircleState s = make_trig(1, TrigPhase::Sin);
  EXPECT_EQ(expectation_exp_ikphi(s, 0), std::complex<double>(1.0, 0.0));
  const auto e2 = expectation_exp_ikphi(s, 2);
  EXPECT_NEAR(e2.real(), -0.5, 1e-15);
  EXPECT_NEAR(e2.imag(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(expectation_exp_ikphi(s, 1)), 0.0, 1e-15);
}

TEST(PeriodicObservables, ExponentialMatchesQuadrature) {
  for (const auto& s : testing::random_corpus(4, 77)) {
    for (int k : {1, 2, 3}) {
      const double re = testing::simpson(
          [&](double x) { return std::cos(k * x) * testing::oracle_density(s, x); }, -kPi, kPi, 4000);
      const double im = testing::simpson(
          [&](double x) { return std::sin(k * x) * testing::oracle_density(s, x); }, -kPi, kPi, 4000);
      const auto got = expectation_exp_ikphi(s, k);
      EXPECT_NEAR(got.real(), re, 1e-12);
      EXPECT_NEAR(got.imag(), im, 1e-12);
    }
  }
}

TEST(PeriodicObservables, TrigMomentsOfBasisStates) {
  const TrigMoments m0 = trig_moments(make_eigenstate(4));
  EXPECT_NEAR(m0.var_cos, 0.5, 1e-15);
  EXPECT_NEAR(m0.var_sin, 0.5, 1e-15);
  const TrigMoments c = trig_moments(make_trig(1, TrigPhase::Cos));
  EXPECT_NEAR(c.var_cos, 0.75, 1e-15);
  EXPECT_NEAR(c.var_sin, 0.25, 1e-15);
  const TrigMoments s = trig_moments(make_trig(1, TrigPhase::Sin));
  EXPECT_NEAR(s.var_cos, 0.25, 1e-15);
  EXPECT_NEAR(s.var_sin, 0.75, 1e-15);
}

TEST(LzMoments, ExactSums) {
  const CircleState s = CircleState::normalized(-1, {complex{1.0, 0.0}, complex{}, complex{0.0, 1.0}});
  const LzMoments lz = lz_moments(s);
  EXPECT_NEAR(lz.mean, 0.0, 1e-15);
  EXPECT_NEAR(lz.variance, 1.0, 1e-15);
}

TEST(ExpLz, EigenstateValues) {
  const ExpLzMoments e = exp_2lz_moments(make_eigenstate(1));
  EXPECT_NEAR(e.plus, std::exp(2.0), 1e-13);
  EXPECT_NEAR(e.minus, std::exp(-2.0), 1e-16);
  EXPECT_THROW(exp_2lz_moments(make_eigenstate(400)), NumericalDomainError);
}

TEST(WindowedMoments, Accessors) {
  const WindowedMoments wm(make_density_poly(0.2));
  EXPECT_EQ(wm.bandwidth(), 8);
  EXPECT_NEAR(wm.density_harmonic(0).real(), 1.0, 1e-15);
  EXPECT_EQ(wm.density_harmonic(9), std::complex<double>{});
}

}  // namespace
}  // namespace ringspread
