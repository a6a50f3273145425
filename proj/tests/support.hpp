#pragma once

#include <algorithm>
#include <cmath>

namespace aastokes::testing {

inline double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

/// Trapezoid rule on [a, b] with n panels; exponentially accurate for
/// integrands decaying to zero at both ends.
template <class F>
double trapezoid(F&& f, double a, double b, int n) {
  const double dx = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * dx);
  return s * dx;
}

/// Composite Simpson rule on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double dx = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * dx);
  return s * dx / 3.0;
}

} // namespace aastokes::testing
