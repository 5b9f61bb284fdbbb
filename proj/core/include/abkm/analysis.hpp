#pragma once

// Synchronization thresholds, critical radius searches, the limit-ratio
// table and ratio-profile sweeps.

#include <string>
#include <vector>

#include "abkm/model.hpp"

namespace abkm {

struct SyncReport {
  double k_value = 0.0;
  double k_critical = 0.0;
  bool synchronizes = false;
  double alpha = 0.0;
};

/// |omega_2 - omega_1| / 2 = |alpha theta_dot| for the mirrored pair.
double critical_coupling(double alpha, double theta_dot);

/// Compares K = |theta_dot| / 2 with K_critical; equality counts as synchronized.
SyncReport synchronizes(double alpha, double theta_dot);

/// Critical coupling for independent (theta_1, theta_1_dot) and (theta_2, theta_2_dot).
double critical_coupling_general(const ModelParams& params, double th1, double th1_dot,
                                 double th2, double th2_dot);

/// Both K_1 = theta_1_dot / 2 and K_2 = -theta_2_dot / 2 reach the general critical coupling.
bool synchronizes_general(const ModelParams& params, double th1, double th1_dot, double th2,
                          double th2_dot);

// Critical radius. The profile family theta -> ratio_profile(alpha, rk, theta)
// flips from concave to convex as rk grows. rk_crit is the rk at which the
// profile's mean deviation from the chord through its endpoint values
// (theta = 0 and the theta -> pi limit) vanishes.

/// Integral over [0, pi] of (profile - chord), by composite Simpson.
double chord_deviation(double alpha, double rk, int panels = 4096);

/// Closed-form root of chord_deviation in rk. Requires -1 <= alpha < 0.
double critical_rk_closed_form(double alpha);

/// Bisection on chord_deviation over [rk_lo, rk_hi].
double critical_rk_scan(double alpha, double rk_lo, double rk_hi, double tol, int panels = 4096);

struct RcritResult {
  double alpha = 0.0;
  double rk_crit_closed_form = 0.0;
  double rk_crit_scan = 0.0;
  double scan_tolerance = 0.0;

  double discrepancy() const;
};

RcritResult critical_rk(double alpha, double rk_lo, double rk_hi, double tol);

struct TableRow {
  double alpha = 0.0;
  long n = 0;
  std::string element;
  double ratio = 0.0;  // rounded to `decimals`
  int decimals = 0;
  bool ab_effect = false;

  std::string ratio_text() const;
};

/// Limit ratios for l = -1 and n in {1..12, 118}. Each row keeps its own
/// printed precision (H, He, Li at 1 decimal; F at 2; the rest at 3).
std::vector<TableRow> table_one();

struct ProfileSweep {
  double alpha = 0.0;
  std::vector<double> rk_values;
  std::vector<double> theta_grid;           // radians
  std::vector<std::vector<double>> values;  // [rk index][theta index]
};

ProfileSweep profile_sweep(double alpha, const std::vector<double>& rk_values,
                           const std::vector<double>& theta_grid);

/// Degrees start, start+step, ..., <= stop.
std::vector<double> degree_grid(double start_deg, double stop_deg, double step_deg);
std::vector<double> to_radians(const std::vector<double>& degrees);

/// Rk family of the alpha = -1/2 and alpha = -1/3 overview plots.
std::vector<double> default_profile_rk_values();
/// Narrow family around rk_crit at alpha = -1/3.
std::vector<double> rcrit_window_rk_values();

/// Physical critical radius sqrt(hbar/m) * sqrt(0.5) * |theta_dot0|^(-1/2).
double rcrit_physical(double theta_dot0, double hbar_over_m);

}  // namespace abkm
