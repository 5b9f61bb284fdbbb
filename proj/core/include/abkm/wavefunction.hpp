#pragma once

// Incident and scattered wavefunctions of the bound-state problem, the
// finite-difference phase-rate oracle, and the bridge to physical units.

#include <complex>
#include <optional>
#include <string>

#include "abkm/dynamics.hpp"
#include "abkm/model.hpp"

namespace abkm {

using ComplexAmp = std::complex<double>;

/// exp(-i (alpha theta + rk cos theta)), |theta| < pi.
ComplexAmp psi_inc(const ModelParams& params, double theta);

/// sin(pi alpha) / (sqrt(2 pi rk) cos(theta/2)) * exp(-i (theta/2 - rk + pi/4)).
/// The 1/sqrt(i) prefactor is folded into the -pi/4 phase. Requires rk > 0;
/// diverges on the interference line theta = +-pi.
ComplexAmp psi_scatt(const ModelParams& params, double theta);

ComplexAmp psi_total(const ModelParams& params, double theta);

/// Central difference of the unwrapped psi_inc phase along `traj` at time t.
/// Approximates natural_frequency(params, theta(t), theta_dot) to O(dt^2).
double phase_rate_oracle(const ModelParams& params, const Trajectory& traj, double t, double dt);

/// hbar and the particle mass. Natural units by default.
struct PhysicalConstants {
  double hbar = 1.0;
  double m0 = 1.0;

  double hbar_over_m() const { return hbar / m0; }
  void validate() const;

  static PhysicalConstants natural() { return {}; }
  /// CODATA hbar [J s] and electron rest mass [kg].
  static PhysicalConstants si_electron() { return {1.054571817e-34, 9.1093837015e-31}; }
};

/// Wave number 2 pi / lambda_0 with lambda_0 = 2 pi hbar / (m0 R |theta_dot0|).
double de_broglie_k(const PhysicalConstants& consts, double radius, double theta_dot0);

struct AbPotential {
  double v_ab = 0.0;
  double omega_inc = 0.0;
};

/// V_AB = alpha theta_dot and omega_inc = (1 - k y / alpha) V_AB.
AbPotential ab_potential(double alpha, double theta_dot, double y, double k);

/// Orbit radius must sit well outside the solenoid: returns a warning when
/// R < 100 R0, nothing otherwise. Nonpositive inputs are domain errors.
std::optional<std::string> check_orbit_radius(double radius, double solenoid_radius);

}  // namespace abkm
