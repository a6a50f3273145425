#pragma once

#include "aastokes/grid.hpp"

namespace aastokes::problems {

/// Rotational Gaussian initial velocity g = curl(0, 0, e^{-|x|^2})
/// = (-2 x_2, 2 x_1, 0) e^{-|x|^2}, with the closed-form Poisson integral.
SeparatedVector3 rotational_gaussian();
Point3 rotational_gaussian_velocity(const Point3& x, double t, double nu = 1.0);

/// Potential forcing f = 2t x e^{-|x|^2} = grad(-t e^{-|x|^2}); the Stokes
/// solution is u = 0 with pressure P = -t e^{-|x|^2}.
SeparatedVector3 gradient_forcing();
/// F = -div f = -t (6 - 4|x|^2) e^{-|x|^2} in separated form (rank 4).
SeparatedFunction3 gradient_forcing_divergence();
double gradient_forcing_pressure(const Point3& x, double t);
Point3 gradient_forcing_pressure_gradient(const Point3& x, double t);

/// Heat source phi = e^{-|x|^2} (1 + 6t - 4|x|^2 t) whose heat potential
/// with nu = 1 is t e^{-|x|^2}.
SeparatedFunction3 heat_source();
double heat_source_solution(const Point3& x, double t);

} // namespace aastokes::problems
