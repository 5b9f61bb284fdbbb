#pragma once

// Closed-form quantities of the two-path phase-oscillator model: flux
// parameter, natural frequency, coupling strength, ratio profiles and the
// analytic phase difference. Everything here is dimensionless and pure.

namespace abkm {

/// Flux parameter alpha = l / n built from the detector (l) and source (n)
/// charge multiples.
class FluxParameter {
 public:
  FluxParameter(long l, long n);

  long l() const noexcept { return l_; }
  long n() const noexcept { return n_; }
  double alpha() const noexcept { return static_cast<double>(l_) / static_cast<double>(n_); }
  /// The AB phase is observable only when l/n has a nonzero fractional part.
  bool detectable() const noexcept { return n_ != 1 && n_ != -1 && l_ % n_ != 0; }

 private:
  long l_;
  long n_;
};

/// (alpha, R k) pair defining the oscillator equations.
class ModelParams {
 public:
  ModelParams(double alpha, double rk);

  double alpha() const noexcept { return alpha_; }
  double rk() const noexcept { return rk_; }

 private:
  double alpha_;
  double rk_;
};

/// Which half of the ring a coordinate lives on: upper is 0 <= theta < pi
/// (counter-clockwise path), lower is -pi < theta <= 0 (clockwise path).
enum class Branch { upper, lower };

bool on_branch(double theta, Branch branch) noexcept;

double flux_alpha(long l, long n);
bool is_detectable(long l, long n);

/// Incident-wave phase rate (alpha - rk sin theta) * theta_dot.
double natural_frequency(const ModelParams& params, double theta, double theta_dot);

/// K = theta_dot / 2, the rate of the scattered-wave phase.
double coupling_strength(double theta_dot);

/// Exact Theta_2 - Theta_1 along mirrored paths: -2 theta alpha on the upper
/// branch, 2 theta alpha on the lower one.
double analytic_phase_difference(double alpha, double theta, Branch branch);

/// Theta_1_dot / theta_dot with the phase difference substituted analytically.
/// The Path 2 profile is the same expression evaluated on the lower branch.
double ratio_profile(const ModelParams& params, double theta, Branch branch = Branch::upper);

/// theta -> pi limit of ratio_profile: alpha - sin(2 pi alpha) / 2.
double limit_ratio(double alpha);

}  // namespace abkm
