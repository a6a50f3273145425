#include "aastokes/quadrature.hpp"

#include "aastokes/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace aastokes {

void DEParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !(kappa > 0.0) || n < 1 || !(drop_threshold >= 0.0))
    throw ParameterError("DE rule: a, b, kappa must be positive and n >= 1");
}

void MoriParams::validate() const {
  if (!(kappa > 0.0) || n < 1 || !(drop_threshold >= 0.0))
    throw ParameterError("Mori rule: kappa must be positive and n >= 1");
}

QuadRule de_halfline_rule(const DEParams& p) {
  p.validate();
  constexpr double r_cap = std::numeric_limits<double>::max() / 2.0;
  QuadRule rule;
  rule.lower = 0.0;
  rule.upper = std::numeric_limits<double>::infinity();
  for (int k = -p.n; k <= p.n; ++k) {
    const double u = p.kappa * k;
    const double emu = std::exp(-u);
    const double tau = p.b * (u - emu);
    const double et = std::exp(tau);
    const double xi = p.a * (tau + et);
    // log of kappa * dr/du = kappa * r * a(1+e^tau) * b(1+e^{-u})
    const double log_w =
        std::log(p.kappa) + xi + std::log(p.a * (1.0 + et)) + std::log(p.b * (1.0 + emu));
    const double r = std::exp(xi);
    const double w = std::exp(log_w);
    if (!std::isfinite(r) || !std::isfinite(w) || r > r_cap) break; // ascending in u
    if (!(w >= p.drop_threshold) || r == 0.0) continue;
    rule.nodes.push_back(r);
    rule.weights.push_back(w);
  }
  if (rule.nodes.empty()) throw NumericError("DE rule: no usable nodes for the given parameters");
  return rule;
}

QuadRule mori_finite_rule(double t_end, const MoriParams& p) {
  p.validate();
  if (!(t_end > 0.0) || !std::isfinite(t_end))
    throw ParameterError("Mori rule: T_end must be positive and finite");
  QuadRule rule;
  rule.lower = 0.0;
  rule.upper = t_end;
  const double half_pi = 0.5 * std::numbers::pi;
  for (int k = -p.n; k <= p.n; ++k) {
    const double x = p.kappa * k;
    const double s = std::numbers::pi * std::sinh(x);
    // node = T/(1+e^{-s}), complement = T/(1+e^{s}); both without cancellation.
    double node, comp;
    if (s >= 0.0) {
      const double e = std::exp(-s);
      node = t_end / (1.0 + e);
      comp = t_end * e / (1.0 + e);
    } else {
      const double e = std::exp(s);
      node = t_end * e / (1.0 + e);
      comp = t_end / (1.0 + e);
    }
    const double c = std::cosh(half_pi * std::sinh(x));
    const double w = p.kappa * t_end * half_pi * std::cosh(x) / (2.0 * c * c);
    if (!std::isfinite(w) || !(w >= p.drop_threshold)) continue;
    if (node <= 0.0 || comp <= 0.0) continue;
    rule.nodes.push_back(node);
    rule.weights.push_back(w);
    rule.complements.push_back(comp);
  }
  if (rule.nodes.empty()) throw NumericError("Mori rule: no usable nodes for the given parameters");
  return rule;
}

QuadRule mori_finite_rule(double t_end, double kappa, int n) {
  MoriParams p;
  p.kappa = kappa;
  p.n = n;
  return mori_finite_rule(t_end, p);
}

} // namespace aastokes
