#pragma once

#include "aastokes/grid.hpp"
#include "aastokes/special_functions.hpp"

namespace aastokes {

/// Knobs of the cubature: order index M, spatial and temporal shape
/// parameters D and D0, viscosity nu.
struct CubatureParams {
  OrderIndex M{1};
  double D = 4.0;
  double D0 = 4.0;
  double nu = 1.0;

  void validate() const;
};

/// Heat (Poisson) integral of the generating function at rescaled time s:
/// pi^{-3/2} e^{-|x|^2/(1+s)} prod_j Q_M(x_j, s).
double poisson_basis(OrderIndex m, const Point3& x, double s);

/// Direct semi-analytic cubature of the Poisson integral of gridded data g
/// at an arbitrary point x and time t >= 0. Sums over every sample of g.
double poisson_cubature(const GridField& g, const CubatureParams& p, const Point3& x, double t);

/// Separated fast path on grid-aligned output: u(hk, t) for k in `out`.
GridField poisson_grid_separated(const SeparatedFunction3& g, const CubatureParams& p,
                                 const UniformGrid3& grid, double t, const IndexWindow& out);

/// Separated path at a single point; x need not lie on the grid.
double poisson_point_separated(const SeparatedFunction3& g, const CubatureParams& p,
                               const UniformGrid3& grid, double t, const Point3& x);

} // namespace aastokes
