#pragma once

#include "aastokes/grid.hpp"
#include "aastokes/heat.hpp"
#include "aastokes/poisson.hpp"
#include "aastokes/quadrature.hpp"

#include <optional>
#include <vector>

namespace aastokes {

/// Cauchy problem u_t - nu Lap u + grad P = f, div u = 0, u(., 0) = g.
struct StokesProblem {
  SeparatedVector3 f;                  ///< right-hand side; empty components are zero
  SeparatedVector3 g;                  ///< divergence-free initial velocity
  std::optional<SeparatedFunction3> F; ///< -div f; derived from f when absent
  double nu = 1.0;
  double T = 1.0;                      ///< final time; output times may not exceed it

  void validate() const;
};

struct StokesSettings {
  CubatureParams params{};  ///< nu is taken from the problem
  double h = 0.1;
  double tau = 0.025;
  double radius = 6.5;      ///< grid half-width; data is truncated outside
  DEParams de{};
  MoriParams mori{};
  double margin = 6.5;      ///< time-sample margin in units of sqrt(D0)
  /// Finite-difference divergence of g may not exceed this times h^2 ||g||_inf.
  double divergence_tolerance = 10.0;
  std::optional<IndexWindow> output; ///< defaults to the full grid

  void validate() const;
};

struct StokesSolution {
  UniformGrid3 grid;
  std::vector<double> times;
  std::vector<GridField> velocity;          ///< three components
  std::vector<GridField> pressure;
  std::vector<GridField> pressure_gradient; ///< three components
};

/// phi_j = f_j - d_j P on the full grid at every sample index of `time`.
/// `grad_p[i - time.i_min]` holds grad P at time index i.
std::array<GriddedDensity, 3> assemble_phi(const SeparatedVector3& f, const UniformGrid3& grid,
                                           const TimeGrid& time,
                                           const std::vector<GridField>& grad_p);

/// Solves on the grid of `settings` at every output time, each of which must
/// be a non-negative multiple of tau no larger than the final time.
StokesSolution solve(const StokesProblem& problem, const StokesSettings& settings,
                     const std::vector<double>& output_times);

} // namespace aastokes
