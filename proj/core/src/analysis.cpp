#include "abkm/analysis.hpp"

#include <array>
#include <cmath>
#include <fmt/format.h>

#include "abkm/errors.hpp"
#include "abkm/numeric.hpp"

namespace abkm {

double critical_coupling(double alpha, double theta_dot) { return std::abs(alpha * theta_dot); }

SyncReport synchronizes(double alpha, double theta_dot) {
  if (theta_dot == 0.0) throw DomainError("threshold undefined at zero angular velocity");
  SyncReport r;
  r.alpha = alpha;
  r.k_value = std::abs(coupling_strength(theta_dot));
  r.k_critical = critical_coupling(alpha, theta_dot);
  r.synchronizes = r.k_value >= r.k_critical;
  return r;
}

double critical_coupling_general(const ModelParams& params, double th1, double th1_dot,
                                 double th2, double th2_dot) {
  if (!on_branch(th1, Branch::upper)) throw DomainError("critical_coupling_general: theta_1 must lie in [0, pi)");
  if (!on_branch(th2, Branch::lower)) throw DomainError("critical_coupling_general: theta_2 must lie in (-pi, 0]");
  const double rk = params.rk();
  return 0.5 * std::abs(params.alpha() * (th2_dot - th1_dot) - rk * th2_dot * std::sin(th2) +
                        rk * th1_dot * std::sin(th1));
}

bool synchronizes_general(const ModelParams& params, double th1, double th1_dot, double th2,
                          double th2_dot) {
  const double k_crit = critical_coupling_general(params, th1, th1_dot, th2, th2_dot);
  return 0.5 * th1_dot >= k_crit && -0.5 * th2_dot >= k_crit;
}

double chord_deviation(double alpha, double rk, int panels) {
  const ModelParams params(alpha, rk);
  const double start = ratio_profile(params, 0.0);
  const double end = limit_ratio(alpha);
  auto integrand = [&](double theta) {
    const double profile = theta < kPi ? ratio_profile(params, theta) : end;
    const double chord = start + (end - start) * theta / kPi;
    return profile - chord;
  };
  return simpson(integrand, 0.0, kPi, panels);
}

double critical_rk_closed_form(double alpha) {
  if (alpha == 0.0) throw DomainError("critical radius undefined at alpha = 0");
  if (!(alpha >= -1.0 && alpha < 0.0)) {
    throw DomainError("critical radius is defined for -1 <= alpha < 0");
  }
  // chord_deviation(rk) = -2 rk + (1 - cos 2 pi a) / (4 a) - (pi / 4) sin 2 pi a,  a = |alpha|,
  // with 1 - cos 2 pi a written as 2 sin^2(pi a) to keep precision for small a.
  const double a = std::abs(alpha);
  const double s_half = sin_pi(a);
  return 0.5 * (s_half * s_half / (2.0 * a) - 0.25 * kPi * sin_pi(2.0 * a));
}

double critical_rk_scan(double alpha, double rk_lo, double rk_hi, double tol, int panels) {
  if (alpha == 0.0) throw DomainError("critical radius undefined at alpha = 0");
  if (!(rk_lo >= 0.0)) throw DomainError("rk bracket must be non-negative");
  if (panels < 2048) throw DomainError("chord quadrature needs at least 2048 panels");
  auto deviation = [&](double rk) { return chord_deviation(alpha, rk, panels); };
  return bisect(deviation, rk_lo, rk_hi, tol);
}

double RcritResult::discrepancy() const { return std::abs(rk_crit_closed_form - rk_crit_scan); }

RcritResult critical_rk(double alpha, double rk_lo, double rk_hi, double tol) {
  RcritResult r;
  r.alpha = alpha;
  r.rk_crit_closed_form = critical_rk_closed_form(alpha);
  r.rk_crit_scan = critical_rk_scan(alpha, rk_lo, rk_hi, tol);
  r.scan_tolerance = tol;
  return r;
}

std::string TableRow::ratio_text() const { return fmt::format("{:.{}f}", ratio, decimals); }

std::vector<TableRow> table_one() {
  struct Entry {
    long n;
    const char* element;
    int decimals;
  };
  static constexpr std::array<Entry, 13> kRows{{
      {1, "H", 1},  {2, "He", 1},  {3, "Li", 1},  {4, "Be", 3},  {5, "B", 3},
      {6, "C", 3},  {7, "N", 3},   {8, "O", 3},   {9, "F", 2},   {10, "Ne", 3},
      {11, "Na", 3}, {12, "Mg", 3}, {118, "Og", 3},
  }};
  std::vector<TableRow> rows;
  rows.reserve(kRows.size());
  for (const auto& e : kRows) {
    const FluxParameter flux(-1, e.n);
    const double scale = std::pow(10.0, e.decimals);
    TableRow row;
    row.alpha = flux.alpha();
    row.n = e.n;
    row.element = e.element;
    row.decimals = e.decimals;
    row.ratio = std::round(limit_ratio(flux.alpha()) * scale) / scale;
    row.ab_effect = flux.detectable();
    rows.push_back(std::move(row));
  }
  return rows;
}

ProfileSweep profile_sweep(double alpha, const std::vector<double>& rk_values,
                           const std::vector<double>& theta_grid) {
  if (rk_values.empty() || theta_grid.empty()) throw DomainError("profile_sweep: empty grid");
  for (double th : theta_grid) {
    if (!on_branch(th, Branch::upper)) {
      throw DomainError("profile_sweep: theta grid must lie in [0, pi)");
    }
  }
  ProfileSweep sweep;
  sweep.alpha = alpha;
  sweep.rk_values = rk_values;
  sweep.theta_grid = theta_grid;
  sweep.values.reserve(rk_values.size());
  for (double rk : rk_values) {
    const ModelParams params(alpha, rk);
    std::vector<double> row;
    row.reserve(theta_grid.size());
    for (double th : theta_grid) row.push_back(ratio_profile(params, th));
    sweep.values.push_back(std::move(row));
  }
  return sweep;
}

std::vector<double> degree_grid(double start_deg, double stop_deg, double step_deg) {
  if (!(step_deg > 0.0)) throw DomainError("theta step must be positive");
  if (!(stop_deg >= start_deg)) throw DomainError("theta range is empty");
  std::vector<double> grid;
  // Integer multiples of the step keep the grid free of accumulated drift.
  for (long i = 0;; ++i) {
    const double v = start_deg + static_cast<double>(i) * step_deg;
    if (v > stop_deg + 1e-9 * step_deg) break;
    grid.push_back(v);
  }
  return grid;
}

std::vector<double> to_radians(const std::vector<double>& degrees) {
  std::vector<double> out;
  out.reserve(degrees.size());
  for (double d : degrees) out.push_back(deg_to_rad(d));
  return out;
}

std::vector<double> default_profile_rk_values() {
  return {0.0001, 0.02, 0.04, 0.1, 0.2, 0.3, 0.4, 0.45, 0.5, 0.55, 0.6, 0.7, 1.0};
}

std::vector<double> rcrit_window_rk_values() { return {0.18, 0.2, 0.22, 0.24, 0.26}; }

double rcrit_physical(double theta_dot0, double hbar_over_m) {
  if (theta_dot0 == 0.0) throw DomainError("rcrit_physical: theta_dot0 must be nonzero");
  if (!(hbar_over_m > 0.0)) throw DomainError("rcrit_physical: hbar/m must be positive");
  return std::sqrt(hbar_over_m) * std::sqrt(0.5) / std::sqrt(std::abs(theta_dot0));
}

}  // namespace abkm
