#include "aastokes/problems.hpp"

#include <cmath>

namespace aastokes::problems {

namespace {

Factor gauss() {
  return Factor::of([](double x) { return std::exp(-x * x); },
                    [](double x) { return -2.0 * x * std::exp(-x * x); });
}

Factor x_gauss() {
  return Factor::of([](double x) { return x * std::exp(-x * x); },
                    [](double x) { return (1.0 - 2.0 * x * x) * std::exp(-x * x); });
}

Factor x2_gauss() {
  return Factor::of([](double x) { return x * x * std::exp(-x * x); },
                    [](double x) { return 2.0 * x * (1.0 - x * x) * std::exp(-x * x); });
}

double norm2(const Point3& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; }

double identity_time(double t) { return t; }

} // namespace

SeparatedVector3 rotational_gaussian() {
  SeparatedVector3 g;
  g[0].add({-2.0, {}, {gauss(), x_gauss(), gauss()}});
  g[1].add({2.0, {}, {x_gauss(), gauss(), gauss()}});
  return g;
}

Point3 rotational_gaussian_velocity(const Point3& x, double t, double nu) {
  const double s = 1.0 + 4.0 * nu * t;
  const double e = std::exp(-norm2(x) / s) / std::pow(s, 2.5);
  return {-2.0 * x[1] * e, 2.0 * x[0] * e, 0.0};
}

SeparatedVector3 gradient_forcing() {
  SeparatedVector3 f;
  for (int c = 0; c < 3; ++c) {
    SeparatedTerm term{2.0, identity_time, {gauss(), gauss(), gauss()}};
    term.factors[c] = x_gauss();
    f[c].add(std::move(term));
  }
  return f;
}

SeparatedFunction3 gradient_forcing_divergence() {
  SeparatedFunction3 F;
  F.add({-6.0, identity_time, {gauss(), gauss(), gauss()}});
  for (int c = 0; c < 3; ++c) {
    SeparatedTerm term{4.0, identity_time, {gauss(), gauss(), gauss()}};
    term.factors[c] = x2_gauss();
    F.add(std::move(term));
  }
  return F;
}

double gradient_forcing_pressure(const Point3& x, double t) { return -t * std::exp(-norm2(x)); }

Point3 gradient_forcing_pressure_gradient(const Point3& x, double t) {
  const double e = 2.0 * t * std::exp(-norm2(x));
  return {e * x[0], e * x[1], e * x[2]};
}

SeparatedFunction3 heat_source() {
  SeparatedFunction3 phi;
  phi.add({1.0, [](double t) { return 1.0 + 6.0 * t; }, {gauss(), gauss(), gauss()}});
  for (int c = 0; c < 3; ++c) {
    SeparatedTerm term{-4.0, identity_time, {gauss(), gauss(), gauss()}};
    term.factors[c] = x2_gauss();
    phi.add(std::move(term));
  }
  return phi;
}

double heat_source_solution(const Point3& x, double t) { return t * std::exp(-norm2(x)); }

} // namespace aastokes::problems
