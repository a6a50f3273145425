#include "aastokes/heat.hpp"

#include "aastokes/errors.hpp"
#include "aastokes/kernels.hpp"
#include "aastokes/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace aastokes {

GriddedDensity GriddedDensity::from_slices(UniformGrid3 grid, TimeGrid time,
                                           std::vector<GridField> slices) {
  grid.validate();
  time.validate();
  if (slices.size() != static_cast<std::size_t>(time.count()))
    throw DataError("gridded density: one slice per time index required");
  for (const auto& s : slices)
    if (s.components() != 1 || s.points() != IndexWindow::full(grid).size())
      throw DataError("gridded density: slices must be scalar full-grid fields");
  GriddedDensity d;
  d.grid_ = grid;
  d.time_ = time;
  d.slices_ = std::move(slices);
  return d;
}

GriddedDensity GriddedDensity::from_basis(UniformGrid3 grid, TimeGrid time,
                                          std::vector<GridField> basis,
                                          std::vector<std::function<double(double)>> weights) {
  grid.validate();
  time.validate();
  if (basis.size() != weights.size()) throw DataError("gridded density: basis/weight count mismatch");
  for (const auto& b : basis)
    if (b.components() != 1 || b.points() != IndexWindow::full(grid).size())
      throw DataError("gridded density: basis fields must be scalar full-grid fields");
  GriddedDensity d;
  d.grid_ = grid;
  d.time_ = time;
  d.basis_ = std::move(basis);
  d.weights_ = std::move(weights);
  return d;
}

double GriddedDensity::value(const Index3& m, int i) const {
  if (i < time_.i_min || i > time_.i_max)
    throw DataError("gridded density: missing time sample " + std::to_string(i));
  if (!slices_.empty()) return slices_[static_cast<std::size_t>(i - time_.i_min)].at(m);
  double v = 0.0;
  for (std::size_t a = 0; a < basis_.size(); ++a) v += weights_[a](time_.time(i)) * basis_[a].at(m);
  return v;
}

void GriddedDensity::combine(std::span<const double> coef, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  if (!slices_.empty()) {
    for (std::size_t n = 0; n < slices_.size(); ++n) {
      const double c = coef[n];
      if (c == 0.0) continue;
      const auto v = slices_[n].values();
      for (std::size_t e = 0; e < out.size(); ++e) out[e] += c * v[e];
    }
    return;
  }
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    double c = 0.0;
    for (int i = time_.i_min; i <= time_.i_max; ++i)
      c += coef[static_cast<std::size_t>(i - time_.i_min)] * weights_[a](time_.time(i));
    const auto v = basis_[a].values();
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += c * v[e];
  }
}

void GriddedDensity::require_cover(int lo, int hi) const {
  if (lo < time_.i_min || hi > time_.i_max)
    throw DataError("gridded density covers time indices [" + std::to_string(time_.i_min) + ", " +
                    std::to_string(time_.i_max) + "] but [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "] are required");
}

HeatRuleCache::HeatRuleCache(double tau, MoriParams params) : tau_(tau), params_(params) {
  if (!(tau > 0.0)) throw ParameterError("heat rule cache: tau must be positive");
  params_.validate();
}

const QuadRule& HeatRuleCache::rule(int ell) {
  if (ell <= 0) throw ParameterError("heat rule: ell must be >= 1");
  auto it = rules_.find(ell);
  if (it == rules_.end()) it = rules_.emplace(ell, mori_finite_rule(tau_ * ell, params_)).first;
  return it->second;
}

TimeGrid heat_time_window(double tau, int ell, double D0, double margin) {
  return TimeGrid::with_margin(tau, ell, D0, margin);
}

namespace {

void check_rule(const QuadRule& rule, double tau, int ell) {
  if (ell <= 0) throw ParameterError("heat: ell must be >= 1");
  if (rule.complements.size() != rule.size())
    throw ParameterError("heat: a finite-interval rule is required");
  const double t_end = tau * ell;
  if (std::abs(rule.upper - t_end) > 1e-12 * t_end)
    throw ParameterError("heat: rule interval does not match tau * ell");
}

double space_time_scale(const CubatureParams& p) {
  return 1.0 / (std::sqrt(p.D0) * std::pow(p.D, 1.5) * std::pow(std::numbers::pi, 1.5));
}

// Rescaled time 4 nu (t - sigma) / (h^2 D) at node q.
double node_time(const CubatureParams& p, double h, const QuadRule& rule, std::size_t q) {
  return 4.0 * p.nu * rule.complements[q] / (h * h * p.D);
}

// eta_{2M}((sigma - tau i)/(tau sqrt(D0))) for i in [lo, hi].
void time_weights(const CubatureParams& p, double tau, double sigma, int lo, int hi,
                  std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(hi - lo + 1));
  const double inv = 1.0 / std::sqrt(p.D0);
  const double st = sigma / tau;
  for (int i = lo; i <= hi; ++i) out[static_cast<std::size_t>(i - lo)] = eta_2m(p.M, (st - i) * inv);
}

std::vector<double> separated_eval(const SeparatedFunction3& phi, const CubatureParams& p,
                                   const UniformGrid3& grid, double tau, int ell,
                                   const QuadRule& rule, const AxisTargets& targets, double margin) {
  p.validate();
  grid.validate();
  std::vector<double> out(targets.size(), 0.0);
  if (ell == 0) return out;
  check_rule(rule, tau, ell);
  const TimeGrid tw = heat_time_window(tau, ell, p.D0, margin);
  const int K = grid.half_extent;
  const double h = grid.h;
  int max_offset = 0;
  for (int a = 0; a < 3; ++a) max_offset = std::max(max_offset, targets.max_abs_index(a) + K);

  const std::size_t n_terms = phi.rank();
  const bool stat = phi.spatially_static();
  const std::size_t n_time = static_cast<std::size_t>(tw.count());
  // samples[s][j] (static) or samples[(i * S + s)][j] (time dependent)
  std::vector<std::array<std::vector<double>, 3>> samples(stat ? n_terms : n_terms * n_time);
  std::vector<double> term_weights(n_terms * n_time);
  for (int i = tw.i_min; i <= tw.i_max; ++i) {
    const auto ii = static_cast<std::size_t>(i - tw.i_min);
    for (std::size_t s = 0; s < n_terms; ++s) {
      term_weights[ii * n_terms + s] = phi.terms()[s].weight(tw.time(i));
      if (!stat || ii == 0)
        for (int j = 0; j < 3; ++j)
          samples[stat ? s : ii * n_terms + s][j] =
              sample_factor(phi.terms()[s].factors[j], grid, tw.time(i));
    }
  }

  const double scale = space_time_scale(p);
  std::vector<double> eta;
  std::vector<double> agg(n_terms);
  std::array<AxisConvolution, 3> conv;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double s_q = node_time(p, h, rule, q);
    time_weights(p, tau, rule.nodes[q], tw.i_min, tw.i_max, eta);
    const KernelTable table(p.M, p.D, s_q, max_offset, false);
    const double wq = scale * rule.weights[q];
    if (stat) {
      std::fill(agg.begin(), agg.end(), 0.0);
      for (std::size_t ii = 0; ii < n_time; ++ii)
        for (std::size_t s = 0; s < n_terms; ++s) agg[s] += eta[ii] * term_weights[ii * n_terms + s];
      for (std::size_t s = 0; s < n_terms; ++s) {
        if (agg[s] == 0.0) continue;
        for (int j = 0; j < 3; ++j)
          convolve_axis(samples[s][j], K, targets.coords[j], targets.integral[j], p.M, p.D, s_q,
                        &table, false, conv[j]);
        accumulate_outer(wq * agg[s], conv[0].value, conv[1].value, conv[2].value, out);
      }
    } else {
      for (std::size_t ii = 0; ii < n_time; ++ii) {
        if (eta[ii] == 0.0) continue;
        for (std::size_t s = 0; s < n_terms; ++s) {
          const double c = eta[ii] * term_weights[ii * n_terms + s];
          if (c == 0.0) continue;
          for (int j = 0; j < 3; ++j)
            convolve_axis(samples[ii * n_terms + s][j], K, targets.coords[j], targets.integral[j],
                          p.M, p.D, s_q, &table, false, conv[j]);
          accumulate_outer(wq * c, conv[0].value, conv[1].value, conv[2].value, out);
        }
      }
    }
  }
  return out;
}

// Separable convolution of a full-grid array with the value kernel of `table`
// along all three axes, restricted to the output window, added to out*coef.
void separable_convolve(std::span<const double> in, int K, const IndexWindow& w,
                        const KernelTable& table, double coef, std::span<double> out,
                        std::vector<double>& b1, std::vector<double>& b2) {
  const auto N = static_cast<std::size_t>(2 * K + 1);
  const auto W0 = static_cast<std::size_t>(w.extent(0));
  const auto W1 = static_cast<std::size_t>(w.extent(1));
  const auto W2 = static_cast<std::size_t>(w.extent(2));
  const int reach = table.reach();
  // axis 2: b1[m0][m1][k2]
  b1.assign(N * N * W2, 0.0);
  for (std::size_t m0 = 0; m0 < N; ++m0)
    for (std::size_t m1 = 0; m1 < N; ++m1) {
      const double* row = in.data() + (m0 * N + m1) * N;
      double* dst = b1.data() + (m0 * N + m1) * W2;
      for (std::size_t c = 0; c < W2; ++c) {
        const int k = w.lo[2] + static_cast<int>(c);
        const int lo = std::max(-K, k - reach), hi = std::min(K, k + reach);
        double s = 0.0;
        for (int m = lo; m <= hi; ++m) s += row[m + K] * table.value(k - m);
        dst[c] = s;
      }
    }
  // axis 1: b2[m0][k1][k2]
  b2.assign(N * W1 * W2, 0.0);
  for (std::size_t m0 = 0; m0 < N; ++m0)
    for (std::size_t b = 0; b < W1; ++b) {
      const int k = w.lo[1] + static_cast<int>(b);
      const int lo = std::max(-K, k - reach), hi = std::min(K, k + reach);
      double* dst = b2.data() + (m0 * W1 + b) * W2;
      for (int m = lo; m <= hi; ++m) {
        const double g = table.value(k - m);
        const double* src = b1.data() + (m0 * N + static_cast<std::size_t>(m + K)) * W2;
        for (std::size_t c = 0; c < W2; ++c) dst[c] += g * src[c];
      }
    }
  // axis 0 into out
  for (std::size_t a = 0; a < W0; ++a) {
    const int k = w.lo[0] + static_cast<int>(a);
    const int lo = std::max(-K, k - reach), hi = std::min(K, k + reach);
    double* dst = out.data() + a * W1 * W2;
    for (int m = lo; m <= hi; ++m) {
      const double g = coef * table.value(k - m);
      const double* src = b2.data() + static_cast<std::size_t>(m + K) * W1 * W2;
      for (std::size_t e = 0; e < W1 * W2; ++e) dst[e] += g * src[e];
    }
  }
}

} // namespace

double km_kernel(const Index3& k_minus_m, int ell, int i, const CubatureParams& p, double h,
                 double tau, const QuadRule& rule) {
  p.validate();
  check_rule(rule, tau, ell);
  const double inv = 1.0 / std::sqrt(p.D0);
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double s_q = node_time(p, h, rule, q);
    double prod = rule.weights[q] * eta_2m(p.M, (rule.nodes[q] / tau - i) * inv);
    for (int j = 0; j < 3; ++j)
      prod *= evaluate_kernel(p.M, p.D, s_q, k_minus_m[j], std::numeric_limits<double>::infinity()).value;
    sum += prod;
  }
  return sum * std::pow(std::numbers::pi, -1.5);
}

double heat_cubature(const GriddedDensity& phi, const CubatureParams& p, double tau,
                     const Index3& k, int ell, const QuadRule& rule, double margin) {
  p.validate();
  if (ell == 0) return 0.0;
  check_rule(rule, tau, ell);
  const TimeGrid tw = heat_time_window(tau, ell, p.D0, margin);
  phi.require_cover(tw.i_min, tw.i_max);
  const auto& grid = phi.grid();
  const int K = grid.half_extent;
  const auto N = static_cast<std::size_t>(2 * K + 1);
  const double inv = 1.0 / std::sqrt(p.D0);

  std::array<std::vector<double>, 3> ker;
  for (auto& v : ker) v.resize(N);
  std::vector<double> slice(N * N * N);
  std::vector<double> unit;
  double sum = 0.0;
  for (int i = tw.i_min; i <= tw.i_max; ++i) {
    // phi(., i) on the full grid
    unit.assign(static_cast<std::size_t>(phi.time().count()), 0.0);
    unit[static_cast<std::size_t>(i - phi.time().i_min)] = 1.0;
    phi.combine(unit, slice);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double s_q = node_time(p, grid.h, rule, q);
      const double c = rule.weights[q] * eta_2m(p.M, (rule.nodes[q] / tau - i) * inv);
      if (c == 0.0) continue;
      for (int a = 0; a < 3; ++a)
        for (int m = -K; m <= K; ++m)
          ker[a][static_cast<std::size_t>(m + K)] =
              evaluate_kernel(p.M, p.D, s_q, k[a] - m, std::numeric_limits<double>::infinity()).value;
      double inner = 0.0;
      std::size_t e = 0;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
          const double kab = ker[0][a] * ker[1][b];
          for (std::size_t d = 0; d < N; ++d) inner += slice[e++] * (kab * ker[2][d]);
        }
      sum += c * inner;
    }
  }
  return sum * space_time_scale(p);
}

GridField heat_grid_gridded(const GriddedDensity& phi, const CubatureParams& p, double tau,
                            int ell, const QuadRule& rule, const IndexWindow& out, double margin) {
  p.validate();
  out.validate();
  const auto& grid = phi.grid();
  GridField field(grid, out, 1);
  if (ell == 0) return field;
  check_rule(rule, tau, ell);
  const TimeGrid tw = heat_time_window(tau, ell, p.D0, margin);
  phi.require_cover(tw.i_min, tw.i_max);
  const int K = grid.half_extent;
  const auto N = static_cast<std::size_t>(2 * K + 1);
  int max_offset = K;
  for (int a = 0; a < 3; ++a) max_offset = std::max({max_offset, K + std::abs(out.lo[a]), K + std::abs(out.hi[a])});

  const double scale = space_time_scale(p);
  std::vector<double> eta, coef(static_cast<std::size_t>(phi.time().count()));
  std::vector<double> weighted(N * N * N), b1, b2;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double s_q = node_time(p, grid.h, rule, q);
    time_weights(p, tau, rule.nodes[q], tw.i_min, tw.i_max, eta);
    std::fill(coef.begin(), coef.end(), 0.0);
    for (int i = tw.i_min; i <= tw.i_max; ++i)
      coef[static_cast<std::size_t>(i - phi.time().i_min)] = eta[static_cast<std::size_t>(i - tw.i_min)];
    phi.combine(coef, weighted);
    const KernelTable table(p.M, p.D, s_q, max_offset, false);
    separable_convolve(weighted, K, out, table, scale * rule.weights[q], field.values(), b1, b2);
  }
  return field;
}

GridField heat_grid_separated(const SeparatedFunction3& phi, const CubatureParams& p,
                              const UniformGrid3& grid, double tau, int ell, const QuadRule& rule,
                              const IndexWindow& out, double margin) {
  out.validate();
  GridField field(grid, out, 1);
  const auto vals =
      separated_eval(phi, p, grid, tau, ell, rule, AxisTargets::from_window(out.lo, out.hi), margin);
  std::copy(vals.begin(), vals.end(), field.values().begin());
  return field;
}

double heat_point_separated(const SeparatedFunction3& phi, const CubatureParams& p,
                            const UniformGrid3& grid, double tau, int ell, const QuadRule& rule,
                            const Point3& x, double margin) {
  return separated_eval(phi, p, grid, tau, ell, rule, AxisTargets::from_point(x, grid.h), margin)[0];
}

} // namespace aastokes
