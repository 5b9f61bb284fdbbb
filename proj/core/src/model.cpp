#include "abkm/model.hpp"

#include <cmath>
#include <string>

#include "abkm/errors.hpp"
#include "abkm/numeric.hpp"

namespace abkm {

namespace {

void require_nonzero_charges(long l, long n) {
  if (l == 0 || n == 0) throw DomainError("charge multiple must be nonzero");
}

const char* branch_name(Branch b) { return b == Branch::upper ? "upper" : "lower"; }

}  // namespace

FluxParameter::FluxParameter(long l, long n) : l_(l), n_(n) { require_nonzero_charges(l, n); }

ModelParams::ModelParams(double alpha, double rk) : alpha_(alpha), rk_(rk) {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  if (!std::isfinite(rk) || rk < 0.0) throw DomainError("rk must be finite and >= 0");
}

bool on_branch(double theta, Branch branch) noexcept {
  if (branch == Branch::upper) return theta >= 0.0 && theta < kPi;
  return theta > -kPi && theta <= 0.0;
}

double flux_alpha(long l, long n) { return FluxParameter(l, n).alpha(); }

bool is_detectable(long l, long n) { return FluxParameter(l, n).detectable(); }

double natural_frequency(const ModelParams& params, double theta, double theta_dot) {
  return (params.alpha() - params.rk() * std::sin(theta)) * theta_dot;
}

double coupling_strength(double theta_dot) { return 0.5 * theta_dot; }

double analytic_phase_difference(double alpha, double theta, Branch branch) {
  if (!on_branch(theta, branch)) {
    throw DomainError("analytic_phase_difference: theta=" + std::to_string(theta) +
                      " outside the " + branch_name(branch) + " branch");
  }
  return branch == Branch::upper ? -2.0 * theta * alpha : 2.0 * theta * alpha;
}

double ratio_profile(const ModelParams& params, double theta, Branch branch) {
  if (!on_branch(theta, branch)) {
    throw DomainError("ratio_profile: theta=" + std::to_string(theta) + " outside the " +
                      branch_name(branch) + " branch");
  }
  // Sum the two sine terms first: at alpha = -1/2, rk = 1/2 they cancel
  // exactly and the profile is exactly alpha.
  const double oscillating =
      0.5 * std::sin(-2.0 * theta * params.alpha()) - params.rk() * std::sin(theta);
  return params.alpha() + oscillating;
}

double limit_ratio(double alpha) { return alpha - 0.5 * sin_pi(2.0 * alpha); }

}  // namespace abkm
