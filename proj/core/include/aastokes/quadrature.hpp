#pragma once

#include <cstddef>
#include <vector>

namespace aastokes {

/// A finite node/weight list approximating a one-dimensional integral.
///
/// Nodes are in the original integration variable and ascending. Weights
/// carry every substitution Jacobian and the trapezoid step. For rules on a
/// finite interval (0, T) the distances T - node are stored separately in
/// `complements`, computed without cancellation; they are empty for
/// half-line rules.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> complements;
  double lower = 0.0;
  double upper = 0.0; // +inf for the half-line rule

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  [[nodiscard]] double apply(F&& f) const {
    double sum = 0.0;
    for (std::size_t p = 0; p < nodes.size(); ++p) sum += weights[p] * f(nodes[p]);
    return sum;
  }
};

/// Parameters of the doubly-exponential rule on (0, inf).
///
/// The trapezoid grid is u_p = kappa * p for p = -n..n; nodes whose weight
/// falls below `drop_threshold` are removed and the upper end is clamped
/// where r or its weight stops being finite.
struct DEParams {
  double a = 5.0;
  double b = 6.0;
  double kappa = 0.0009;
  int n = 1300;
  double drop_threshold = 1e-300;

  void validate() const;
};

/// Parameters of the tanh-sinh style rule on (0, T).
struct MoriParams {
  double kappa = 0.002;
  int n = 2000;
  double drop_threshold = 1e-300;

  void validate() const;
};

/// Rule for int_0^inf f(r) dr from r = e^xi, xi = a(tau + e^tau),
/// tau = b(u - e^{-u}), trapezoid in u.
QuadRule de_halfline_rule(const DEParams& p = {});

/// Rule for int_0^T f(s) ds from s = T / (1 + e^{-pi sinh x}), trapezoid in x.
QuadRule mori_finite_rule(double t_end, const MoriParams& p = {});
QuadRule mori_finite_rule(double t_end, double kappa, int n);

} // namespace aastokes
