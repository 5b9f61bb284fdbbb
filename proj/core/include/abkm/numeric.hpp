#pragma once

#include <cmath>
#include <numbers>

#include "abkm/errors.hpp"

namespace abkm {

inline constexpr double kPi = std::numbers::pi;

/// sin(pi * x), exactly zero at integers and exactly +-1 at half-integers.
inline double sin_pi(double x) {
  // remainder() is exact, so the reduced argument carries no rounding.
  const double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0 * r;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Composite Simpson rule on [a, b] with `panels` subintervals (rounded up to even).
template <class F>
double simpson(F&& f, double a, double b, int panels) {
  if (panels < 2) throw DomainError("simpson: need at least 2 panels");
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < panels; ++i) {
    const double x = a + i * h;
    (i % 2 == 1 ? odd : even) += f(x);
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

/// Bisection for a root of f on [lo, hi]; the bracket must straddle a sign change.
template <class F>
double bisect(F&& f, double lo, double hi, double tol, int max_iter = 200) {
  if (!(lo < hi)) throw SearchError("bisect: empty bracket");
  if (!(tol > 0.0)) throw DomainError("bisect: tolerance must be positive");
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) throw SearchError("bisect: no sign change on bracket");
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace abkm
