#include "aastokes/poisson.hpp"

#include "aastokes/errors.hpp"
#include "aastokes/kernels.hpp"

#include <cmath>
#include <numbers>

namespace aastokes {

void CubatureParams::validate() const {
  if (!(D >= 1.0) || !std::isfinite(D)) throw ParameterError("cubature: D must be >= 1");
  if (!(D0 > 0.0) || !std::isfinite(D0)) throw ParameterError("cubature: D0 must be positive");
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ParameterError("cubature: nu must be positive");
}

double poisson_basis(OrderIndex m, const Point3& x, double s) {
  if (!(s >= 0.0)) throw ParameterError("poisson_basis: s must be non-negative");
  const QrEvaluator qr(m, s);
  double prod = std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / (1.0 + s));
  for (int j = 0; j < 3; ++j) prod *= qr.q(x[j]);
  return prod * std::pow(std::numbers::pi, -1.5);
}

namespace {

double rescaled_time(const CubatureParams& p, double h, double t) {
  return 4.0 * p.nu * t / (h * h * p.D);
}

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("poisson: t must be >= 0");
}

// u on a tensor product of axis targets, values in target order (axis 2 fastest).
std::vector<double> separated_eval(const SeparatedFunction3& g, const CubatureParams& p,
                                   const UniformGrid3& grid, double t, const AxisTargets& targets) {
  p.validate();
  grid.validate();
  check_time(t);
  const double s = rescaled_time(p, grid.h, t);
  const int K = grid.half_extent;
  int max_offset = 0;
  for (int a = 0; a < 3; ++a) max_offset = std::max(max_offset, targets.max_abs_index(a) + K);
  const KernelTable table(p.M, p.D, s, max_offset, false);
  const double norm = 1.0 / std::sqrt(std::numbers::pi * p.D);

  std::vector<double> out(targets.size(), 0.0);
  std::array<AxisConvolution, 3> conv;
  for (const auto& term : g.terms()) {
    for (int j = 0; j < 3; ++j) {
      // Initial data: factors are sampled at time 0.
      const auto samples = sample_factor(term.factors[j], grid, 0.0);
      convolve_axis(samples, K, targets.coords[j], targets.integral[j], p.M, p.D, s, &table, false,
                    conv[j]);
    }
    accumulate_outer(term.weight(0.0) * norm * norm * norm, conv[0].value, conv[1].value,
                     conv[2].value, out);
  }
  return out;
}

} // namespace

double poisson_cubature(const GridField& g, const CubatureParams& p, const Point3& x, double t) {
  p.validate();
  check_time(t);
  if (g.components() != 1) throw ParameterError("poisson_cubature: scalar data expected");
  const double h = g.grid().h;
  const double s = rescaled_time(p, h, t);
  const auto& w = g.window();
  // Per-axis kernel factors at the offsets (x_j - h m_j)/h; their product is
  // the full Gaussian times prod Q_M.
  std::array<std::vector<double>, 3> ker;
  for (int a = 0; a < 3; ++a) {
    ker[a].resize(static_cast<std::size_t>(w.extent(a)));
    for (int m = w.lo[a]; m <= w.hi[a]; ++m)
      ker[a][static_cast<std::size_t>(m - w.lo[a])] =
          evaluate_kernel(p.M, p.D, s, x[a] / h - m, std::numeric_limits<double>::infinity()).value;
  }
  double sum = 0.0;
  auto vals = g.values();
  std::size_t i = 0;
  for (std::size_t a = 0; a < ker[0].size(); ++a)
    for (std::size_t b = 0; b < ker[1].size(); ++b) {
      const double kab = ker[0][a] * ker[1][b];
      for (std::size_t c = 0; c < ker[2].size(); ++c) sum += vals[i++] * (kab * ker[2][c]);
    }
  return sum * std::pow(std::numbers::pi * p.D, -1.5);
}

GridField poisson_grid_separated(const SeparatedFunction3& g, const CubatureParams& p,
                                 const UniformGrid3& grid, double t, const IndexWindow& out) {
  GridField field(grid, out, 1);
  const auto vals = separated_eval(g, p, grid, t, AxisTargets::from_window(out.lo, out.hi));
  std::copy(vals.begin(), vals.end(), field.values().begin());
  return field;
}

double poisson_point_separated(const SeparatedFunction3& g, const CubatureParams& p,
                               const UniformGrid3& grid, double t, const Point3& x) {
  return separated_eval(g, p, grid, t, AxisTargets::from_point(x, grid.h))[0];
}

} // namespace aastokes
