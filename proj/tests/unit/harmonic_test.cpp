#include "aastokes/errors.hpp"
#include "aastokes/harmonic.hpp"
#include "aastokes/problems.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <utility>

namespace aastokes {
namespace {

using testing::rel_diff;
using testing::simpson;

// Newtonian potential of the radial density pi^{-3/2} e^{-s^2} by the shell
// formula (1/rho) int_0^rho s^2 f + int_rho^inf s f.
double radial_potential(double rho) {
  const double c = std::pow(std::numbers::pi, -1.5);
  const auto f = [c](double s) { return c * std::exp(-s * s); };
  const double inner = simpson([&](double s) { return s * s * f(s); }, 0.0, rho, 20000) / rho;
  const double outer = simpson([&](double s) { return s * f(s); }, rho, rho + 12.0, 40000);
  return inner + outer;
}

TEST(HarmonicBasis, GaussianMatchesRadialOracle) {
  const QuadRule rule = de_halfline_rule();
  for (double rho : {0.1, 0.8, 1.7, 3.5}) {
    const double closed = std::erf(rho) / (4.0 * std::numbers::pi * rho);
    EXPECT_LT(rel_diff(radial_potential(rho), closed), 1e-9);
    const Point3 x{rho / std::sqrt(3.0), -rho / std::sqrt(3.0), rho / std::sqrt(3.0)};
    EXPECT_LT(rel_diff(harmonic_basis(OrderIndex(1), x, rule), closed), 1e-13) << rho;
  }
  EXPECT_LT(rel_diff(harmonic_basis(OrderIndex(1), {0, 0, 0}, rule), 0.5 * std::pow(std::numbers::pi, -1.5)), 1e-13);
}

TEST(HarmonicBasis, NegativeLaplacianIsGeneratingFunction) {
  const QuadRule rule = de_halfline_rule();
  const double d = 2e-2;
  for (int M = 1; M <= 4; ++M) {
    const OrderIndex m(M);
    for (const Point3 x : {Point3{0.2, 0.5, -0.3}, Point3{1.0, 0.0, 0.7}}) {
      // fourth-order central stencil per axis
      double lap = -3.0 * 30.0 * harmonic_basis(m, x, rule);
      for (int a = 0; a < 3; ++a)
        for (auto [s, w] : {std::pair{d, 16.0}, std::pair{-d, 16.0}, std::pair{2 * d, -1.0}, std::pair{-2 * d, -1.0}}) {
          Point3 y = x;
          y[a] += s;
          lap += w * harmonic_basis(m, y, rule);
        }
      lap /= 12.0 * d * d;
      const double target = eta_2m(m, x[0]) * eta_2m(m, x[1]) * eta_2m(m, x[2]);
      EXPECT_NEAR(-lap, target, 1e-4 * std::abs(target) + 1e-6) << M;
    }
  }
}

TEST(HarmonicBasis, GradientMatchesFiniteDifference) {
  const QuadRule rule = de_halfline_rule();
  const double d = 1e-5;
  for (int M = 1; M <= 4; ++M)
    for (int a = 0; a < 3; ++a) {
      const Point3 x{0.4, -0.9, 1.3};
      Point3 xp = x, xm = x;
      xp[a] += d;
      xm[a] -= d;
      const double fd = (harmonic_basis(OrderIndex(M), xp, rule) - harmonic_basis(OrderIndex(M), xm, rule)) / (2 * d);
      EXPECT_NEAR(grad_harmonic_basis(a, OrderIndex(M), x, rule), fd, 1e-9);
    }
}

class PressureIdentity : public ::testing::TestWithParam<int> {};

TEST_P(PressureIdentity, SeparatedMatchesDirect) {
  CubatureParams p;
  p.M = OrderIndex(GetParam());
  p.D = 5.0;
  const auto grid = UniformGrid3::covering(0.25, 2.5);
  const auto hr = HarmonicRule::make(p, grid.h);
  const auto F = problems::gradient_forcing_divergence();
  const GridField samples = sample([&](const Point3& x, double t) { return F(x, t); }, grid, 1.0);
  for (const Point3 x : {Point3{0.5, 0.25, -0.75}, Point3{0.3, 1.1, 0.05}}) {
    EXPECT_LT(rel_diff(pressure_cubature(samples, hr, x), pressure_point_separated(F, hr, grid, 1.0, x)), 1e-13);
    const Point3 gd = grad_pressure_cubature(samples, hr, x);
    const Point3 gs = grad_pressure_point_separated(F, hr, grid, 1.0, x);
    for (int a = 0; a < 3; ++a) EXPECT_LT(rel_diff(gd[a], gs[a]), 1e-12) << a;
  }
  const auto fields = pressure_fields_separated(F, hr, grid, 1.0, IndexWindow::cube(1), true);
  fields.pressure.for_each_index([&](const Index3& k) {
    const Point3 x = fields.pressure.point(k);
    EXPECT_LT(rel_diff(fields.pressure.at(k), pressure_cubature(samples, hr, x)), 1e-13);
    const Point3 gd = grad_pressure_cubature(samples, hr, x);
    for (int a = 0; a < 3; ++a)
      EXPECT_NEAR(fields.gradient.at(a, k), gd[a], 1e-13 * fields.gradient.max_abs());
  });
}

INSTANTIATE_TEST_SUITE_P(Orders, PressureIdentity, ::testing::Values(1, 2, 4));

TEST(Pressure, TermDecompositionSumsToField) {
  CubatureParams p;
  p.M = OrderIndex(2);
  p.D = 5.0;
  const auto grid = UniformGrid3::covering(0.25, 3.0);
  const auto hr = HarmonicRule::make(p, grid.h);
  const auto F = problems::gradient_forcing_divergence();
  const auto w = IndexWindow::cube(2);
  const double t = 0.7;
  const auto terms = pressure_terms_separated(F, hr, grid, t, w, true);
  ASSERT_EQ(terms.size(), F.rank());
  const auto whole = pressure_fields_separated(F, hr, grid, t, w, true);
  GridField sum(grid, w, 1), gsum(grid, w, 3);
  for (std::size_t s = 0; s < terms.size(); ++s) {
    GridField a = terms[s].pressure, b = terms[s].gradient;
    a *= F.terms()[s].time_weight(t);
    b *= F.terms()[s].time_weight(t);
    sum += a;
    gsum += b;
  }
  sum -= whole.pressure;
  gsum -= whole.gradient;
  EXPECT_LT(sum.max_abs(), 1e-15);
  EXPECT_LT(gsum.max_abs(), 1e-15);
  const auto P = pressure_grid_separated(F, hr, grid, t, w);
  const auto G = grad_pressure_grid_separated(F, hr, grid, t, w);
  P.for_each_index([&](const Index3& k) {
    EXPECT_DOUBLE_EQ(P.at(k), whole.pressure.at(k));
    EXPECT_DOUBLE_EQ(G.at(1, k), whole.gradient.at(1, k));
  });
}

TEST(Pressure, GradientIsDerivativeOfPressure) {
  CubatureParams p;
  p.M = OrderIndex(2);
  p.D = 5.0;
  const double h = 0.1;
  const auto grid = UniformGrid3::covering(h, 6.5);
  const auto hr = HarmonicRule::make(p, h);
  const auto F = problems::gradient_forcing_divergence();
  const Point3 x{0.3, 0.8, -0.45};
  const Point3 g = grad_pressure_point_separated(F, hr, grid, 1.0, x);
  for (int a = 0; a < 3; ++a) {
    double prev = 0;
    for (double d : {h, h / 2}) {
      Point3 xp = x, xm = x;
      xp[a] += d;
      xm[a] -= d;
      const double fd = (pressure_point_separated(F, hr, grid, 1.0, xp) - pressure_point_separated(F, hr, grid, 1.0, xm)) / (2 * d);
      const double diff = std::abs(fd - g[a]);
      if (prev > 0) EXPECT_NEAR(prev / diff, 4.0, 0.3) << a;
      prev = diff;
    }
  }
}

TEST(Pressure, SecondOrderAnchor) {
  CubatureParams p;
  p.D = 5.0;
  const auto hr = HarmonicRule::make(p, 0.1);
  const Point3 x{1.2, 1.2, 1.2};
  const double err = std::abs(pressure_point_separated(problems::gradient_forcing_divergence(), hr,
                                                       UniformGrid3::covering(0.1, 6.5), 1.0, x) -
                              problems::gradient_forcing_pressure(x, 1.0));
  EXPECT_NEAR(err, 1.885e-3, 1e-5);
}

} // namespace
} // namespace aastokes
