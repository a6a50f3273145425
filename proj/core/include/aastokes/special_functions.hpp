#pragma once

#include <array>

namespace aastokes {

/// Order index M of the Gaussian-Hermite generating functions; the
/// approximation order is 2M. Supported range is 1..10.
class OrderIndex {
public:
  static constexpr int max_value = 10;

  explicit OrderIndex(int m);

  [[nodiscard]] int value() const noexcept { return m_; }
  [[nodiscard]] int order() const noexcept { return 2 * m_; }

  friend bool operator==(OrderIndex, OrderIndex) = default;

private:
  int m_;
};

/// Physicists' Hermite polynomial H_k(x), by the three-term recurrence.
double hermite(int k, double x);

/// One-dimensional generating function eta_{2M}(x). The factor H_{2M-1}(x)/x
/// is evaluated as an even polynomial in x, so x = 0 is a regular point.
double eta_2m(OrderIndex m, double x);

/// Q_M(x, r): the polynomial factor of the heat (Poisson) integral of the
/// generating function. Degree 2M-2 in x. Requires r >= 0.
double q_m(OrderIndex m, double x, double r);

/// R_M(x, r) = dQ_M/dx. Identically zero for M = 1. Requires r >= 0.
double r_m(OrderIndex m, double x, double r);

/// Evaluates Q_M(., r) and R_M(., r) for a fixed r with the r-dependent
/// coefficients hoisted. Used by the kernel tables on the hot path.
class QrEvaluator {
public:
  QrEvaluator(OrderIndex m, double r);

  [[nodiscard]] double q(double x) const;
  [[nodiscard]] double r(double x) const;
  /// Both values from a single Hermite recurrence.
  void both(double x, double& q_out, double& r_out) const;

  [[nodiscard]] double inverse_scale() const noexcept { return inv_sqrt_; }

private:
  int m_;
  double inv_sqrt_; // 1/sqrt(1+r)
  std::array<double, OrderIndex::max_value> qc_{};
  std::array<double, OrderIndex::max_value> rc_{};
};

} // namespace aastokes
