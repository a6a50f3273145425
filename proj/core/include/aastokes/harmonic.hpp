#pragma once

#include "aastokes/grid.hpp"
#include "aastokes/poisson.hpp"
#include "aastokes/quadrature.hpp"

#include <vector>

namespace aastokes {

/// Half-line quadrature shared by every pressure evaluation for one
/// (params, h) configuration.
struct HarmonicRule {
  QuadRule rule;
  CubatureParams params;
  double h = 0.1;

  static HarmonicRule make(const CubatureParams& params, double h, const DEParams& de = {});
};

/// Newtonian potential of the generating function prod_j eta_{2M}(x_j)
/// via the one-dimensional r-integral, discretized by `rule`.
double harmonic_basis(OrderIndex m, const Point3& x, const QuadRule& rule);

/// d/dx_axis of `harmonic_basis`; axis is 0-based.
double grad_harmonic_basis(int axis, OrderIndex m, const Point3& x, const QuadRule& rule);

/// Direct cubature of P = L F from gridded samples F(hm, t) at any point x.
double pressure_cubature(const GridField& F, const HarmonicRule& hr, const Point3& x);

/// Direct cubature of grad P from gridded samples at any point x.
Point3 grad_pressure_cubature(const GridField& F, const HarmonicRule& hr, const Point3& x);

/// Pressure and its gradient on a window of grid points.
struct PressureFields {
  GridField pressure;
  GridField gradient; // three components; empty when not requested
};

/// P(hk, t) for k in `out` via products of one-dimensional convolutions.
GridField pressure_grid_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                  const UniformGrid3& grid, double t, const IndexWindow& out);

/// grad P(hk, t) for k in `out`; three components.
GridField grad_pressure_grid_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                       const UniformGrid3& grid, double t, const IndexWindow& out);

/// Both at once, sharing the kernel tables.
PressureFields pressure_fields_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                         const UniformGrid3& grid, double t,
                                         const IndexWindow& out, bool with_gradient = true);

/// One entry per term of F, each without its time weight (coefficient
/// included). For spatially static F the pressure at time t is
/// sum_s c_s(t) * terms[s]. Factors are sampled at `t`.
std::vector<PressureFields> pressure_terms_separated(const SeparatedFunction3& F,
                                                     const HarmonicRule& hr,
                                                     const UniformGrid3& grid, double t,
                                                     const IndexWindow& out,
                                                     bool with_gradient = true);

/// Separated path at a single point (x need not be grid-aligned).
double pressure_point_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                const UniformGrid3& grid, double t, const Point3& x);
Point3 grad_pressure_point_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                     const UniformGrid3& grid, double t, const Point3& x);

} // namespace aastokes
