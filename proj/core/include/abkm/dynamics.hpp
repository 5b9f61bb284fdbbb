#pragma once

// Phase-oscillator dynamics on prescribed circular trajectories.
//
// Positions theta_i(t) are kinematic: theta_i(t) = theta0_i + theta_dot_i * t.
// Only the oscillator phases Theta_i are integrated. Four right-hand sides
// are provided: the mirrored two-path system, the general two-path system,
// the N-oscillator system and its half-phase variant.

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "abkm/model.hpp"
#include "abkm/numeric.hpp"

namespace abkm {

/// Constant-angular-velocity motion on the ring. The sign of theta_dot
/// encodes the direction (positive = counter-clockwise, Path 1).
struct Trajectory {
  double theta0 = 0.0;
  double theta_dot = 0.0;
  double theta_max = kPi;

  double theta_at(double t) const noexcept { return theta0 + theta_dot * t; }

  /// Path 1 / Path 2 pair starting together at theta0 and moving apart
  /// with equal speed.
  static Trajectory path1(double speed, double theta0 = 0.0);
  static Trajectory mirror_of(const Trajectory& t);
};

bool is_mirror_pair(const Trajectory& a, const Trajectory& b) noexcept;

struct EnsembleState {
  double t = 0.0;
  std::vector<double> thetas;
  std::vector<double> phases;

  std::size_t size() const noexcept { return phases.size(); }
};

/// State at t = 0 with all phases zero, positions from the trajectories.
EnsembleState initial_state(std::span<const Trajectory> trajs);

enum class Model { mirrored, general, n_body, half_phase };

Model parse_model(const std::string& name);
std::string to_string(Model m);

struct IntegratorConfig {
  double dt = 1e-4;
  double t_end = 1.0;
  int record_every = 1;
  /// Integration stops before any |theta_i| exceeds theta_max - boundary_margin.
  double boundary_margin = 1e-6;

  void validate() const;
  /// 1e-4 * pi / |theta_dot|: ten thousand steps per half revolution.
  static double default_dt(double theta_dot);
};

/// Named per-sample residuals. Mirrored runs carry "phase_diff_residual".
using Diagnostics = std::map<std::string, double>;

enum class StopReason { reached_t_end, reached_boundary };

struct TimeSeries {
  std::vector<EnsembleState> samples;
  std::vector<Diagnostics> diagnostics;
  StopReason stop_reason = StopReason::reached_t_end;

  const EnsembleState& back() const { return samples.back(); }
  /// Largest value of a named diagnostic over all samples (0 if absent).
  double max_diagnostic(const std::string& name) const;
};

using Rates = std::vector<double>;

Rates rhs_two_mirrored(const ModelParams& params, const EnsembleState& state,
                       const Trajectory& traj1, const Trajectory& traj2);
Rates rhs_general_two(const ModelParams& params, const EnsembleState& state,
                      std::span<const Trajectory> trajs);
Rates rhs_n(const ModelParams& params, const EnsembleState& state,
            std::span<const Trajectory> trajs);
/// Phases are the half phases vartheta_i = Theta_i / 2.
Rates rhs_half_phase(const ModelParams& params, const EnsembleState& state,
                     std::span<const Trajectory> trajs);

/// Dispatches to the right-hand side for `model`.
Rates evaluate_rhs(Model model, const ModelParams& params, const EnsembleState& state,
                   std::span<const Trajectory> trajs);

using RhsFunction = std::function<Rates(const ModelParams&, const EnsembleState&,
                                        std::span<const Trajectory>)>;

/// Fixed-step RK4 on the phases. Positions follow the trajectories exactly.
/// Stops at config.t_end or just before a trajectory would leave its window,
/// whichever comes first; the final state is always recorded.
TimeSeries integrate(Model model, const ModelParams& params, const EnsembleState& initial,
                     std::span<const Trajectory> trajs, const IntegratorConfig& config);

/// Same loop with a caller-supplied right-hand side; no model-specific diagnostics.
TimeSeries integrate(const RhsFunction& rhs, const ModelParams& params,
                     const EnsembleState& initial, std::span<const Trajectory> trajs,
                     const IntegratorConfig& config);

struct OrderParameter {
  double r = 0.0;
  double psi = 0.0;
};

/// r e^{i psi} = mean of e^{i Theta_j}.
OrderParameter order_parameter(std::span<const double> phases);

}  // namespace abkm
