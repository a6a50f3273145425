#include "aastokes/stokes.hpp"

#include "aastokes/errors.hpp"
#include "aastokes/harmonic.hpp"
#include "aastokes/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aastokes {

void StokesProblem::validate() const {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw ParameterError("stokes: nu must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) throw ParameterError("stokes: final time must be non-negative");
}

void StokesSettings::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("stokes: h must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterError("stokes: tau must be positive");
  if (!(radius >= h)) throw ParameterError("stokes: radius must be at least h");
  if (!(margin > 0.0)) throw ParameterError("stokes: margin must be positive");
  if (!(divergence_tolerance > 0.0)) throw ParameterError("stokes: divergence tolerance must be positive");
  de.validate();
  mori.validate();
}

namespace {

bool is_empty(const SeparatedVector3& v) {
  return v[0].empty() && v[1].empty() && v[2].empty();
}

// Full-grid field for one separated term without its time weight.
GridField term_field(const SeparatedTerm& term, const UniformGrid3& grid, double t) {
  GridField out(grid, IndexWindow::full(grid), 1);
  const auto x = sample_factor(term.factors[0], grid, t);
  const auto y = sample_factor(term.factors[1], grid, t);
  const auto z = sample_factor(term.factors[2], grid, t);
  accumulate_outer(term.coefficient, x, y, z, out.values());
  return out;
}

// Copy of `src` restricted to window `w`.
GridField restrict_to(const GridField& src, const IndexWindow& w) {
  GridField out(src.grid(), w, src.components());
  for (int c = 0; c < src.components(); ++c)
    out.for_each_index([&](const Index3& k) { out.at(c, k) = src.at(c, k); });
  return out;
}

void add_scaled(GridField& dst, const GridField& src, double s) {
  auto d = dst.values();
  const auto v = src.values();
  for (std::size_t e = 0; e < d.size(); ++e) d[e] += s * v[e];
}

std::vector<int> output_indices(const std::vector<double>& times, double tau, double T) {
  std::vector<int> ell;
  ell.reserve(times.size());
  for (double t : times) {
    const double q = t / tau;
    const double r = std::round(q);
    if (!(t >= 0.0) || std::abs(q - r) > 1e-9 * std::max(1.0, q)) {
      std::ostringstream msg;
      msg << "stokes: output time " << t << " is not a non-negative multiple of tau = " << tau;
      throw ParameterError(msg.str());
    }
    if (t > T * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << "stokes: output time " << t << " exceeds the final time " << T;
      throw ParameterError(msg.str());
    }
    ell.push_back(static_cast<int>(r));
  }
  return ell;
}

void check_divergence(const SeparatedVector3& g, const UniformGrid3& grid, double tolerance) {
  if (is_empty(g)) return;
  std::array<PointEvaluator, 3> fn;
  for (int c = 0; c < 3; ++c) fn[c] = [&g, c](const Point3& x, double) { return g[c](x, 0.0); };
  const GridField v = sample(fn, grid, 0.0);
  const double norm = v.max_abs();
  const double div = finite_difference_divergence(v).max_abs();
  if (div > tolerance * grid.h * grid.h * norm) {
    std::ostringstream msg;
    msg << "stokes: initial velocity is not divergence-free (max |div g| = " << div
        << ", allowed " << tolerance * grid.h * grid.h * norm << ")";
    throw DataError(msg.str());
  }
}

} // namespace

std::array<GriddedDensity, 3> assemble_phi(const SeparatedVector3& f, const UniformGrid3& grid,
                                           const TimeGrid& time,
                                           const std::vector<GridField>& grad_p) {
  if (grad_p.size() != static_cast<std::size_t>(time.count()))
    throw DataError("assemble_phi: pressure gradient missing for some time samples");
  std::array<std::vector<GridField>, 3> slices;
  for (int i = time.i_min; i <= time.i_max; ++i) {
    const auto& gp = grad_p[static_cast<std::size_t>(i - time.i_min)];
    if (gp.components() != 3 || gp.points() != IndexWindow::full(grid).size())
      throw DataError("assemble_phi: pressure gradient must be a full-grid vector field");
    const double t = time.time(i);
    for (int c = 0; c < 3; ++c) {
      GridField phi(grid, IndexWindow::full(grid), 1);
      for (const auto& term : f[c].terms()) add_scaled(phi, term_field(term, grid, t), term.time_weight ? term.time_weight(t) : 1.0);
      auto d = phi.values();
      const auto g = gp.component(c);
      for (std::size_t e = 0; e < d.size(); ++e) d[e] -= g[e];
      slices[c].push_back(std::move(phi));
    }
  }
  return {GriddedDensity::from_slices(grid, time, std::move(slices[0])),
          GriddedDensity::from_slices(grid, time, std::move(slices[1])),
          GriddedDensity::from_slices(grid, time, std::move(slices[2]))};
}

StokesSolution solve(const StokesProblem& problem, const StokesSettings& settings,
                     const std::vector<double>& output_times) {
  problem.validate();
  settings.validate();
  CubatureParams params = settings.params;
  params.nu = problem.nu;
  params.validate();

  StokesSolution sol;
  sol.grid = UniformGrid3::covering(settings.h, settings.radius);
  const UniformGrid3& grid = sol.grid;
  const IndexWindow full = IndexWindow::full(grid);
  const IndexWindow out = settings.output.value_or(full);
  out.validate();
  for (int a = 0; a < 3; ++a)
    if (out.lo[a] < -grid.half_extent || out.hi[a] > grid.half_extent)
      throw ParameterError("stokes: output window exceeds the grid");
  const std::vector<int> ell = output_indices(output_times, settings.tau, problem.T);
  check_divergence(problem.g, grid, settings.divergence_tolerance);
  sol.times = output_times;

  // u1: Poisson integral of the initial velocity.
  for (std::size_t n = 0; n < ell.size(); ++n) {
    GridField u(grid, out, 3);
    for (int c = 0; c < 3; ++c) {
      if (problem.g[c].empty()) continue;
      const GridField uc = poisson_grid_separated(problem.g[c], params, grid, output_times[n], out);
      std::copy(uc.values().begin(), uc.values().end(), u.component(c).begin());
    }
    sol.velocity.push_back(std::move(u));
    sol.pressure.emplace_back(grid, out, 1);
    sol.pressure_gradient.emplace_back(grid, out, 3);
  }
  if (is_empty(problem.f) && (!problem.F || problem.F->empty())) return sol;

  const SeparatedFunction3 F = problem.F ? *problem.F : separated_divergence(problem.f);
  const HarmonicRule hr = HarmonicRule::make(params, settings.h, settings.de);
  const int ell_max = ell.empty() ? 0 : *std::max_element(ell.begin(), ell.end());
  const TimeGrid time = TimeGrid::with_margin(settings.tau, ell_max, params.D0, settings.margin);

  bool separable = F.spatially_static();
  for (const auto& fc : problem.f) separable = separable && fc.spatially_static();

  std::vector<GriddedDensity> phi;
  if (separable) {
    // P(., t) = sum_s c_s(t) P_s with pressure terms computed once.
    const auto terms = pressure_terms_separated(F, hr, grid, 0.0, full, true);
    for (std::size_t n = 0; n < ell.size(); ++n) {
      const double t = output_times[n];
      GridField P(grid, full, 1), G(grid, full, 3);
      for (std::size_t s = 0; s < terms.size(); ++s) {
        const auto& tw = F.terms()[s].time_weight;
        const double c = tw ? tw(t) : 1.0;
        add_scaled(P, terms[s].pressure, c);
        add_scaled(G, terms[s].gradient, c);
      }
      sol.pressure[n] = restrict_to(P, out);
      sol.pressure_gradient[n] = restrict_to(G, out);
    }
    for (int c = 0; c < 3; ++c) {
      std::vector<GridField> basis;
      std::vector<std::function<double(double)>> weights;
      const auto unit = [](double) { return 1.0; };
      for (const auto& term : problem.f[c].terms()) {
        basis.push_back(term_field(term, grid, 0.0));
        weights.push_back(term.time_weight ? term.time_weight : unit);
      }
      for (std::size_t s = 0; s < terms.size(); ++s) {
        GridField b(grid, full, 1);
        const auto src = terms[s].gradient.component(c);
        auto dst = b.values();
        for (std::size_t e = 0; e < dst.size(); ++e) dst[e] = -src[e];
        basis.push_back(std::move(b));
        const auto& tw = F.terms()[s].time_weight;
        weights.push_back(tw ? tw : unit);
      }
      phi.push_back(GriddedDensity::from_basis(grid, time, std::move(basis), std::move(weights)));
    }
  } else {
    // Pressure per time sample.
    std::vector<GridField> grad_p;
    grad_p.reserve(static_cast<std::size_t>(time.count()));
    for (int i = time.i_min; i <= time.i_max; ++i) {
      auto fields = pressure_fields_separated(F, hr, grid, time.time(i), full, true);
      for (std::size_t n = 0; n < ell.size(); ++n)
        if (ell[n] == i) {
          sol.pressure[n] = restrict_to(fields.pressure, out);
          sol.pressure_gradient[n] = restrict_to(fields.gradient, out);
        }
      grad_p.push_back(std::move(fields.gradient));
    }
    auto assembled = assemble_phi(problem.f, grid, time, grad_p);
    for (auto& d : assembled) phi.push_back(std::move(d));
  }

  // u2: heat potential of phi.
  HeatRuleCache rules(settings.tau, settings.mori);
  for (std::size_t n = 0; n < ell.size(); ++n) {
    if (ell[n] == 0) continue;
    const QuadRule& rule = rules.rule(ell[n]);
    for (int c = 0; c < 3; ++c) {
      const GridField u2 = heat_grid_gridded(phi[static_cast<std::size_t>(c)], params, settings.tau,
                                             ell[n], rule, out, settings.margin);
      auto dst = sol.velocity[n].component(c);
      const auto src = u2.values();
      for (std::size_t e = 0; e < dst.size(); ++e) dst[e] += src[e];
    }
  }
  return sol;
}

} // namespace aastokes
