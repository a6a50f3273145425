#pragma once

#include "aastokes/grid.hpp"
#include "aastokes/poisson.hpp"
#include "aastokes/quadrature.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace aastokes {

/// Scalar space-time density phi(hm, tau i) on the full spatial grid for
/// every time index of `time`. Two storage forms:
///  - explicit slices, one GridField per time index;
///  - separable in time, phi(., t) = sum_a weights[a](t) * basis[a].
class GriddedDensity {
public:
  static GriddedDensity from_slices(UniformGrid3 grid, TimeGrid time, std::vector<GridField> slices);
  static GriddedDensity from_basis(UniformGrid3 grid, TimeGrid time, std::vector<GridField> basis,
                                   std::vector<std::function<double(double)>> weights);

  [[nodiscard]] const UniformGrid3& grid() const noexcept { return grid_; }
  [[nodiscard]] const TimeGrid& time() const noexcept { return time_; }

  [[nodiscard]] double value(const Index3& m, int i) const;
  /// out = sum_i coef[i - i_min] * phi(., i), full grid in storage order.
  void combine(std::span<const double> coef, std::span<double> out) const;
  /// Raises DataError unless every time index in [lo, hi] is available.
  void require_cover(int lo, int hi) const;

private:
  UniformGrid3 grid_{};
  TimeGrid time_{};
  std::vector<GridField> slices_;
  std::vector<GridField> basis_;
  std::vector<std::function<double(double)>> weights_;
};

/// Finite-interval rules for T_end = tau * ell, built on first use.
/// Not thread-safe; use one cache per thread.
class HeatRuleCache {
public:
  HeatRuleCache(double tau, MoriParams params = {});
  const QuadRule& rule(int ell);

private:
  double tau_;
  MoriParams params_;
  std::map<int, QuadRule> rules_;
};

/// Time indices the heat cubature at time index ell samples: the interval
/// [0, ell] padded by ceil(margin * sqrt(D0)).
TimeGrid heat_time_window(double tau, int ell, double D0, double margin = 6.5);

/// Space-time kernel K_M for spatial offset k - m, output time index ell
/// and sample index i, by quadrature with `rule` built on (0, tau*ell).
double km_kernel(const Index3& k_minus_m, int ell, int i, const CubatureParams& p, double h,
                 double tau, const QuadRule& rule);

/// Direct cubature of the heat potential of gridded phi at grid point k and
/// time tau*ell: sum over every (i, m) sample of phi(hm, tau i) K_M.
double heat_cubature(const GriddedDensity& phi, const CubatureParams& p, double tau,
                     const Index3& k, int ell, const QuadRule& rule, double margin = 6.5);

/// Gridded fast path: the time-weighted density of each quadrature node is
/// convolved with the separable spatial kernel axis by axis.
GridField heat_grid_gridded(const GriddedDensity& phi, const CubatureParams& p, double tau,
                            int ell, const QuadRule& rule, const IndexWindow& out,
                            double margin = 6.5);

/// Separated fast path on grid-aligned output.
GridField heat_grid_separated(const SeparatedFunction3& phi, const CubatureParams& p,
                              const UniformGrid3& grid, double tau, int ell, const QuadRule& rule,
                              const IndexWindow& out, double margin = 6.5);

/// Separated path at a single point (not necessarily on the grid).
double heat_point_separated(const SeparatedFunction3& phi, const CubatureParams& p,
                            const UniformGrid3& grid, double tau, int ell, const QuadRule& rule,
                            const Point3& x, double margin = 6.5);

} // namespace aastokes
