#include "abkm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "abkm/errors.hpp"

namespace abkm {

namespace {

std::string oscillator_label(std::size_t i) { return "oscillator " + std::to_string(i + 1); }

void require_size(const EnsembleState& state, std::size_t n_trajs, const char* who) {
  if (state.thetas.size() != state.phases.size()) {
    throw ContractError(std::string(who) + ": thetas and phases differ in length");
  }
  if (state.phases.size() != n_trajs) {
    throw ContractError(std::string(who) + ": state has " + std::to_string(state.phases.size()) +
                        " oscillators but " + std::to_string(n_trajs) + " trajectories given");
  }
  if (n_trajs < 2) throw ContractError(std::string(who) + ": need at least two oscillators");
}

void require_branch(double theta, Branch branch, std::size_t i, const char* who) {
  if (!on_branch(theta, branch)) {
    throw DomainError(std::string(who) + ": " + oscillator_label(i) + " at theta=" +
                      std::to_string(theta) + " is off its " +
                      (branch == Branch::upper ? "upper [0, pi)" : "lower (-pi, 0]") + " branch");
  }
}

void require_open_window(double theta, std::size_t i, const char* who) {
  if (!(std::abs(theta) < kPi)) {
    throw DomainError(std::string(who) + ": " + oscillator_label(i) + " at theta=" +
                      std::to_string(theta) + " is outside (-pi, pi)");
  }
}

Rates two_path_rates(const ModelParams& p, const EnsembleState& s, double th1_dot, double th2_dot) {
  const double coupling = 0.5 * std::sin(s.phases[1] - s.phases[0]);
  const double a = p.alpha();
  return {(a - p.rk() * std::sin(s.thetas[0]) + coupling) * th1_dot,
          (a - p.rk() * std::sin(s.thetas[1]) - coupling) * th2_dot};
}

// (1/N) sum_j sin(phase_j - phase_i) for every i.
std::vector<double> mean_sine_coupling(std::span<const double> phases) {
  const std::size_t n = phases.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += std::sin(phases[j] - phases[i]);
    out[i] = sum / static_cast<double>(n);
  }
  return out;
}

EnsembleState stage_state(double t, std::span<const Trajectory> trajs, std::vector<double> phases) {
  EnsembleState s;
  s.t = t;
  s.thetas.reserve(trajs.size());
  for (const auto& tr : trajs) s.thetas.push_back(tr.theta_at(t));
  s.phases = std::move(phases);
  return s;
}

using DiagnosticFn = std::function<Diagnostics(const EnsembleState&)>;

TimeSeries run_rk4(const RhsFunction& rhs, const ModelParams& params, const EnsembleState& initial,
                   std::span<const Trajectory> trajs, const IntegratorConfig& config,
                   const DiagnosticFn& diagnose) {
  config.validate();
  require_size(initial, trajs.size(), "integrate");
  if (initial.t != 0.0) throw ContractError("integrate: initial state must be at t = 0");
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    const auto& tr = trajs[i];
    if (!(std::abs(tr.theta0) < tr.theta_max) || !(tr.theta_max <= kPi)) {
      throw DomainError("integrate: " + oscillator_label(i) + " starts outside its window");
    }
    if (std::abs(initial.thetas[i] - tr.theta0) > 1e-12) {
      throw ContractError("integrate: initial position of " + oscillator_label(i) +
                          " disagrees with its trajectory");
    }
  }

  TimeSeries out;
  auto record = [&](const EnsembleState& s) {
    out.samples.push_back(s);
    out.diagnostics.push_back(diagnose ? diagnose(s) : Diagnostics{});
  };

  const std::size_t n = trajs.size();
  const auto full_steps = static_cast<long long>(std::floor(config.t_end / config.dt));
  const double remainder = config.t_end - static_cast<double>(full_steps) * config.dt;
  const long long total_steps = full_steps + (remainder > 1e-9 * config.dt ? 1 : 0);

  auto crosses_boundary = [&](double t) {
    return std::any_of(trajs.begin(), trajs.end(), [&](const Trajectory& tr) {
      return std::abs(tr.theta_at(t)) > tr.theta_max - config.boundary_margin;
    });
  };

  EnsembleState current = stage_state(0.0, trajs, initial.phases);
  record(current);
  bool last_recorded = true;

  std::vector<double> y(n);
  for (long long k = 1; k <= total_steps; ++k) {
    const double t = current.t;
    const double t_next = k <= full_steps ? static_cast<double>(k) * config.dt : config.t_end;
    if (crosses_boundary(t_next)) {
      out.stop_reason = StopReason::reached_boundary;
      break;
    }
    const double h = t_next - t;
    const auto& y0 = current.phases;

    const Rates k1 = rhs(params, current, trajs);
    for (std::size_t i = 0; i < n; ++i) y[i] = y0[i] + 0.5 * h * k1[i];
    const Rates k2 = rhs(params, stage_state(t + 0.5 * h, trajs, y), trajs);
    for (std::size_t i = 0; i < n; ++i) y[i] = y0[i] + 0.5 * h * k2[i];
    const Rates k3 = rhs(params, stage_state(t + 0.5 * h, trajs, y), trajs);
    for (std::size_t i = 0; i < n; ++i) y[i] = y0[i] + h * k3[i];
    const Rates k4 = rhs(params, stage_state(t_next, trajs, y), trajs);

    for (std::size_t i = 0; i < n; ++i) {
      y[i] = y0[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i])) {
        throw NumericalError("integrate: non-finite phase for " + oscillator_label(i) +
                                 " at t=" + std::to_string(t_next),
                             t_next);
      }
    }
    current = stage_state(t_next, trajs, y);

    last_recorded = (k % config.record_every == 0) || k == total_steps;
    if (last_recorded) record(current);
  }
  if (!last_recorded) record(current);
  return out;
}

}  // namespace

Trajectory Trajectory::path1(double speed, double theta0) {
  return Trajectory{theta0, speed, kPi};
}

Trajectory Trajectory::mirror_of(const Trajectory& t) {
  return Trajectory{-t.theta0, -t.theta_dot, t.theta_max};
}

bool is_mirror_pair(const Trajectory& a, const Trajectory& b) noexcept {
  return a.theta0 == -b.theta0 && a.theta_dot == -b.theta_dot && a.theta_max == b.theta_max &&
         a.theta0 >= 0.0 && a.theta_dot >= 0.0;
}

EnsembleState initial_state(std::span<const Trajectory> trajs) {
  return stage_state(0.0, trajs, std::vector<double>(trajs.size(), 0.0));
}

Model parse_model(const std::string& name) {
  if (name == "mirrored") return Model::mirrored;
  if (name == "general") return Model::general;
  if (name == "n") return Model::n_body;
  if (name == "half") return Model::half_phase;
  throw DomainError("unknown model '" + name + "' (expected mirrored, general, n or half)");
}

std::string to_string(Model m) {
  switch (m) {
    case Model::mirrored: return "mirrored";
    case Model::general: return "general";
    case Model::n_body: return "n";
    case Model::half_phase: return "half";
  }
  return "?";
}

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw DomainError("t_end must be positive");
  if (t_end / dt > 1e8) throw DomainError("t_end/dt exceeds 1e8 steps");
  if (record_every < 1) throw DomainError("record_every must be >= 1");
  if (!(boundary_margin >= 0.0)) throw DomainError("boundary_margin must be >= 0");
}

double IntegratorConfig::default_dt(double theta_dot) {
  if (theta_dot == 0.0) return 1e-4;
  return 1e-4 * (kPi / std::abs(theta_dot));
}

double TimeSeries::max_diagnostic(const std::string& name) const {
  double m = 0.0;
  for (const auto& d : diagnostics) {
    if (auto it = d.find(name); it != d.end()) m = std::max(m, it->second);
  }
  return m;
}

Rates rhs_two_mirrored(const ModelParams& params, const EnsembleState& state,
                       const Trajectory& traj1, const Trajectory& traj2) {
  constexpr const char* who = "rhs_two_mirrored";
  require_size(state, 2, who);
  require_branch(state.thetas[0], Branch::upper, 0, who);
  require_branch(state.thetas[1], Branch::lower, 1, who);
  if (traj1.theta_dot < 0.0) throw DomainError("rhs_two_mirrored: oscillator 1 must move counter-clockwise");
  if (traj2.theta_dot > 0.0) throw DomainError("rhs_two_mirrored: oscillator 2 must move clockwise");
  return two_path_rates(params, state, traj1.theta_dot, traj2.theta_dot);
}

Rates rhs_general_two(const ModelParams& params, const EnsembleState& state,
                      std::span<const Trajectory> trajs) {
  constexpr const char* who = "rhs_general_two";
  require_size(state, trajs.size(), who);
  if (trajs.size() != 2) throw ContractError("rhs_general_two: exactly two oscillators required");
  require_branch(state.thetas[0], Branch::upper, 0, who);
  require_branch(state.thetas[1], Branch::lower, 1, who);
  return two_path_rates(params, state, trajs[0].theta_dot, trajs[1].theta_dot);
}

Rates rhs_n(const ModelParams& params, const EnsembleState& state,
            std::span<const Trajectory> trajs) {
  constexpr const char* who = "rhs_n";
  require_size(state, trajs.size(), who);
  const auto coupling = mean_sine_coupling(state.phases);
  Rates rates(trajs.size());
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    require_open_window(state.thetas[i], i, who);
    rates[i] = (params.alpha() - params.rk() * std::sin(state.thetas[i]) + coupling[i]) *
               trajs[i].theta_dot;
  }
  return rates;
}

Rates rhs_half_phase(const ModelParams& params, const EnsembleState& state,
                     std::span<const Trajectory> trajs) {
  constexpr const char* who = "rhs_half_phase";
  require_size(state, trajs.size(), who);
  const auto coupling = mean_sine_coupling(state.phases);
  Rates rates(trajs.size());
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    require_open_window(state.thetas[i], i, who);
    rates[i] = 0.5 *
               (params.alpha() - params.rk() * std::sin(state.thetas[i]) + coupling[i]) *
               trajs[i].theta_dot;
  }
  return rates;
}

Rates evaluate_rhs(Model model, const ModelParams& params, const EnsembleState& state,
                   std::span<const Trajectory> trajs) {
  switch (model) {
    case Model::mirrored:
      if (trajs.size() != 2) throw ContractError("mirrored model needs exactly two trajectories");
      return rhs_two_mirrored(params, state, trajs[0], trajs[1]);
    case Model::general: return rhs_general_two(params, state, trajs);
    case Model::n_body: return rhs_n(params, state, trajs);
    case Model::half_phase: return rhs_half_phase(params, state, trajs);
  }
  throw ContractError("unknown model");
}

TimeSeries integrate(Model model, const ModelParams& params, const EnsembleState& initial,
                     std::span<const Trajectory> trajs, const IntegratorConfig& config) {
  DiagnosticFn diagnose;
  if (model == Model::mirrored) {
    if (trajs.size() != 2 || !is_mirror_pair(trajs[0], trajs[1])) {
      throw ContractError("mirrored model needs a counter-clockwise path and its mirror image");
    }
    if (initial.phases.size() != 2) throw ContractError("mirrored model needs two phases");
    // Theta_2 - Theta_1 advances at exactly -2 alpha theta_1_dot.
    const double alpha = params.alpha();
    const double diff0 = initial.phases[1] - initial.phases[0];
    const double theta0 = trajs[0].theta0;
    diagnose = [=](const EnsembleState& s) {
      const double expected = diff0 - 2.0 * alpha * (s.thetas[0] - theta0);
      return Diagnostics{{"phase_diff_residual", std::abs((s.phases[1] - s.phases[0]) - expected)}};
    };
  } else if (model == Model::general && trajs.size() != 2) {
    throw ContractError("general model needs exactly two trajectories");
  }
  RhsFunction rhs = [model](const ModelParams& p, const EnsembleState& s,
                            std::span<const Trajectory> tr) { return evaluate_rhs(model, p, s, tr); };
  return run_rk4(rhs, params, initial, trajs, config, diagnose);
}

TimeSeries integrate(const RhsFunction& rhs, const ModelParams& params,
                     const EnsembleState& initial, std::span<const Trajectory> trajs,
                     const IntegratorConfig& config) {
  return run_rk4(rhs, params, initial, trajs, config, {});
}

OrderParameter order_parameter(std::span<const double> phases) {
  if (phases.empty()) throw ContractError("order_parameter: no phases");
  std::complex<double> sum{0.0, 0.0};
  for (double p : phases) sum += std::polar(1.0, p);
  sum /= static_cast<double>(phases.size());
  double psi = std::arg(sum);
  if (psi == -kPi) psi = kPi;
  return {std::abs(sum), psi};
}

}  // namespace abkm
