#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "abkm/analysis.hpp"
#include "abkm/errors.hpp"
#include "abkm/model.hpp"
#include "abkm/numeric.hpp"
#include "abkm/wavefunction.hpp"

using namespace abkm;

namespace {

/// Trajectory through `theta` at t = 0.
Trajectory through(double theta, double theta_dot) { return Trajectory{theta, theta_dot, kPi}; }

}  // namespace

TEST(PsiInc, Examples) {
  const auto at_zero = psi_inc({-0.7, 0.3}, 0.0);
  EXPECT_NEAR(at_zero.real(), 0.955336489125606, 1e-15);
  EXPECT_NEAR(at_zero.imag(), -0.29552020666134, 1e-14);
  EXPECT_NEAR(std::arg(psi_inc({-0.5, 0.0}, kPi / 2)), kPi / 4, 1e-15);
  EXPECT_THROW(psi_inc({-0.5, 0.0}, kPi), DomainError);
  EXPECT_THROW(psi_inc({-0.5, 0.0}, -3.5), DomainError);
}

TEST(PsiInc, UnitModulus) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> alpha(-3.0, 3.0), rk(0.0, 50.0), theta(-3.14, 3.14);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_NEAR(std::abs(psi_inc({alpha(rng), rk(rng)}, theta(rng))), 1.0, 1e-15);
  }
}

TEST(PsiScatt, VanishesExactlyForIntegerAlpha) {
  for (double a : {-3.0, -2.0, -1.0, 1.0, 2.0})
    for (double th : {0.0, 0.5, -2.0, 3.0}) EXPECT_EQ(std::abs(psi_scatt({a, 0.5}, th)), 0.0);
  for (double a : {-0.5, -1.0 / 3.0, -0.2, 0.75})
    for (double th : {0.0, 1.5}) EXPECT_GT(std::abs(psi_scatt({a, 0.5}, th)), 0.0);
}

TEST(PsiScatt, VanishingMatchesUndetectableFlux) {
  for (long l : {-3, -2, -1, 1, 2})
    for (long n : {1, 2, 3, 4, 6, 118}) {
      const double mag = std::abs(psi_scatt({flux_alpha(l, n), 0.4}, 0.9));
      EXPECT_EQ(mag == 0.0, !is_detectable(l, n)) << l << "/" << n;
    }
}

TEST(PsiScatt, MagnitudeAndPhase) {
  const auto s = psi_scatt({-0.5, 0.5}, 0.0);
  EXPECT_NEAR(std::abs(s), 1.0 / std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(std::abs(s), 0.56419, 1e-5);
  // Real prefactor sin(pi alpha) = -1 flips the phasor e^{-i(-rk + pi/4)}.
  const ComplexAmp expected = -std::polar(1.0 / std::sqrt(kPi), -(-0.5 + kPi / 4));
  EXPECT_NEAR(s.real(), expected.real(), 1e-15);
  EXPECT_NEAR(s.imag(), expected.imag(), 1e-15);
  EXPECT_GT(std::abs(psi_scatt({-0.5, 0.5}, kPi - 1e-6)), 1e5);
}

TEST(PsiScatt, Errors) {
  EXPECT_THROW(psi_scatt({-0.5, 0.5}, kPi), SingularityError);
  EXPECT_THROW(psi_scatt({-0.5, 0.5}, -kPi), SingularityError);
  EXPECT_THROW(psi_scatt({-0.5, 0.0}, 0.3), DomainError);
  EXPECT_THROW(psi_scatt({-0.5, 0.5}, 4.0), DomainError);
}

TEST(PsiTotal, SumOfComponents) {
  const ModelParams p(-0.5, 0.5);
  const auto total = psi_total(p, 0.0);
  EXPECT_EQ(total, psi_inc(p, 0.0) + psi_scatt(p, 0.0));
  EXPECT_EQ(psi_total({-1.0, 0.5}, 1.0), psi_inc({-1.0, 0.5}, 1.0));
  const auto diff = psi_total(p, 1.1) - psi_scatt(p, 1.1);
  EXPECT_NEAR(diff.real(), psi_inc(p, 1.1).real(), 1e-15);
  EXPECT_NEAR(diff.imag(), psi_inc(p, 1.1).imag(), 1e-15);
}

TEST(PhaseRateOracle, Examples) {
  EXPECT_NEAR(phase_rate_oracle({-0.5, 0.5}, through(kPi / 2, 1.0), 0.0, 1e-5), -1.0, 1e-9);
  for (double th : {-2.0, 0.0, 1.3})
    EXPECT_NEAR(phase_rate_oracle({-0.3, 0.0}, through(th, 2.0), 0.0, 1e-5), -0.6, 1e-10);
  const double fwd = phase_rate_oracle({-0.4, 0.8}, through(0.7, 1.5), 0.0, 1e-5);
  const double rev = phase_rate_oracle({-0.4, 0.8}, through(0.7, -1.5), 0.0, 1e-5);
  EXPECT_NEAR(fwd, -rev, 1e-9);
  EXPECT_THROW(phase_rate_oracle({-0.4, 0.8}, through(0.7, 1.5), 0.0, 2.0), DomainError);
  EXPECT_THROW(phase_rate_oracle({-0.4, 0.8}, through(0.7, 1.5), 0.0, 0.0), DomainError);
}

TEST(PhaseRateOracle, AgreesWithNaturalFrequencyAtSecondOrder) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> alpha(-1.0, 0.0), rk(0.0, 2.0), theta(-kPi + 0.1, kPi - 0.1),
      speed(-5.0, 5.0);
  double worst_dt = 0.0, worst_half = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double w = speed(rng);
    if (w == 0.0) w = 1.0;
    const ModelParams p(alpha(rng), rk(rng) + 1e-12);
    const auto traj = through(theta(rng), w);
    const double exact = natural_frequency(p, traj.theta0, w);
    const double e1 = std::abs(phase_rate_oracle(p, traj, 0.0, 1e-3) - exact);
    const double e2 = std::abs(phase_rate_oracle(p, traj, 0.0, 5e-4) - exact);
    ASSERT_LE(std::abs(phase_rate_oracle(p, traj, 0.0, 1e-5) - exact), 1e-7);
    worst_dt = std::max(worst_dt, e1);
    worst_half = std::max(worst_half, e2);
  }
  EXPECT_NEAR(worst_dt / worst_half, 4.0, 0.2);
}

TEST(DeBroglie, WaveNumber) {
  EXPECT_DOUBLE_EQ(de_broglie_k(PhysicalConstants::natural(), 1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(de_broglie_k({}, 2.0, 0.7), 2.0 * de_broglie_k({}, 1.0, 0.7));
  EXPECT_DOUBLE_EQ(de_broglie_k({}, 1.0, -3.0), 3.0);
  EXPECT_THROW(de_broglie_k({}, 0.0, 1.0), DomainError);
  EXPECT_THROW(de_broglie_k({}, -1.0, 1.0), DomainError);
  EXPECT_THROW(de_broglie_k({}, 1.0, 0.0), DomainError);
  EXPECT_THROW(de_broglie_k({0.0, 1.0}, 1.0, 1.0), DomainError);
}

TEST(DeBroglie, CriticalRadiusRoundTrip) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> log_scale(-6.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const PhysicalConstants c{std::pow(10.0, log_scale(rng)), std::pow(10.0, log_scale(rng))};
    const double w = std::pow(10.0, log_scale(rng)) * (i % 2 ? 1.0 : -1.0);
    const double r_crit = rcrit_physical(w, c.hbar_over_m());
    ASSERT_NEAR(de_broglie_k(c, r_crit, w) * r_crit, 0.5, 0.5e-12);
  }
  const auto si = PhysicalConstants::si_electron();
  const double r = rcrit_physical(1e6, si.hbar_over_m());
  EXPECT_NEAR(de_broglie_k(si, r, 1e6) * r, 0.5, 1e-12);
}

TEST(AbPotential, EqualsNaturalFrequencyOnTheOrbit) {
  EXPECT_DOUBLE_EQ(ab_potential(-0.5, 1.0, 0.0, 3.0).omega_inc, -0.5);
  const auto v = ab_potential(-0.5, 1.0, 1.0, 0.5);  // kR = 0.5 at theta = pi/2
  EXPECT_DOUBLE_EQ(v.v_ab, -0.5);
  EXPECT_DOUBLE_EQ(v.omega_inc, -1.0);
  EXPECT_DOUBLE_EQ(ab_potential(-0.3, 4.0, 0.2, 1.1).omega_inc, 2.0 * ab_potential(-0.3, 2.0, 0.2, 1.1).omega_inc);
  EXPECT_THROW(ab_potential(0.0, 1.0, 0.0, 1.0), DomainError);

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> alpha(-1.0, -0.01), radius(0.1, 5.0), k(0.1, 3.0),
      theta(-3.1, 3.1), speed(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = alpha(rng), R = radius(rng), kk = k(rng), th = theta(rng), w = speed(rng);
    const double expected = natural_frequency({a, kk * R}, th, w);
    ASSERT_NEAR(ab_potential(a, w, R * std::sin(th), kk).omega_inc, expected,
                1e-13 * (1.0 + std::abs(expected) + kk * R * std::abs(w)));
  }
}

TEST(OrbitRadius, WarnsBelowHundredSolenoidRadii) {
  EXPECT_FALSE(check_orbit_radius(1.0, 0.01).has_value());
  EXPECT_TRUE(check_orbit_radius(0.5, 0.01).has_value());
  EXPECT_THROW(check_orbit_radius(0.0, 0.01), DomainError);
}
