#include "abkm/wavefunction.hpp"

#include <cmath>
#include <fmt/format.h>

#include "abkm/errors.hpp"
#include "abkm/numeric.hpp"

namespace abkm {

namespace {

void require_open_ring(double theta, const char* who) {
  if (!std::isfinite(theta)) throw DomainError(fmt::format("{}: theta must be finite", who));
  if (!(std::abs(theta) < kPi)) {
    throw DomainError(fmt::format("{}: theta={} outside (-pi, pi)", who, theta));
  }
}

}  // namespace

ComplexAmp psi_inc(const ModelParams& params, double theta) {
  require_open_ring(theta, "psi_inc");
  const double phase = params.alpha() * theta + params.rk() * std::cos(theta);
  return std::polar(1.0, -phase);
}

ComplexAmp psi_scatt(const ModelParams& params, double theta) {
  if (std::isfinite(theta) && std::abs(theta) == kPi) {
    throw SingularityError("psi_scatt: scattered wave diverges on the interference line");
  }
  require_open_ring(theta, "psi_scatt");
  if (!(params.rk() > 0.0)) throw DomainError("psi_scatt: rk must be positive");
  const double amplitude =
      sin_pi(params.alpha()) / (std::sqrt(2.0 * kPi * params.rk()) * std::cos(0.5 * theta));
  const double phase = 0.5 * theta - params.rk() + 0.25 * kPi;
  return std::polar(1.0, -phase) * amplitude;
}

ComplexAmp psi_total(const ModelParams& params, double theta) {
  return psi_inc(params, theta) + psi_scatt(params, theta);
}

double phase_rate_oracle(const ModelParams& params, const Trajectory& traj, double t, double dt) {
  if (!(dt > 0.0)) throw DomainError("phase_rate_oracle: dt must be positive");
  // The principal value of the phase increment is unambiguous only while the
  // true increment over 2 dt stays below pi.
  const double rate_bound = (std::abs(params.alpha()) + params.rk()) * std::abs(traj.theta_dot);
  if (2.0 * dt * rate_bound >= kPi) {
    throw DomainError("phase_rate_oracle: step too large to unwrap the phase");
  }
  const ComplexAmp ahead = psi_inc(params, traj.theta_at(t + dt));
  const ComplexAmp behind = psi_inc(params, traj.theta_at(t - dt));
  // psi_inc = exp(-i * integral of omega), so the rate is minus the phase slope.
  const double increment = std::arg(ahead * std::conj(behind));
  return -increment / (2.0 * dt);
}

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0) || !(m0 > 0.0)) throw DomainError("physical constants must be positive");
}

double de_broglie_k(const PhysicalConstants& consts, double radius, double theta_dot0) {
  consts.validate();
  if (!(radius > 0.0)) throw DomainError("de_broglie_k: radius must be positive");
  if (theta_dot0 == 0.0) throw DomainError("de_broglie_k: theta_dot0 must be nonzero");
  return consts.m0 * radius * std::abs(theta_dot0) / consts.hbar;
}

AbPotential ab_potential(double alpha, double theta_dot, double y, double k) {
  if (alpha == 0.0) throw DomainError("ab_potential: alpha must be nonzero");
  const double v_ab = alpha * theta_dot;
  return {v_ab, (1.0 - k * y / alpha) * v_ab};
}

std::optional<std::string> check_orbit_radius(double radius, double solenoid_radius) {
  if (!(radius > 0.0) || !(solenoid_radius > 0.0)) {
    throw DomainError("orbit and solenoid radii must be positive");
  }
  if (radius < 100.0 * solenoid_radius) {
    return fmt::format("orbit radius {} is less than 100x the solenoid radius {}", radius,
                       solenoid_radius);
  }
  return std::nullopt;
}

}  // namespace abkm
