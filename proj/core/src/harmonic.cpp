#include "aastokes/harmonic.hpp"

#include "aastokes/errors.hpp"
#include "aastokes/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace aastokes {

namespace {

const double inv_pi32 = std::pow(std::numbers::pi, -1.5);

double pressure_scale(const CubatureParams& p, double h) {
  return h * h * p.D / (4.0 * std::pow(std::numbers::pi * p.D, 1.5));
}

double gradient_scale(const CubatureParams& p, double h) {
  return h * std::sqrt(p.D) / (4.0 * std::pow(std::numbers::pi * p.D, 1.5));
}

struct TargetAccumulator {
  std::vector<double> pressure;
  std::array<std::vector<double>, 3> gradient;
};

// Core of the separated path: per-term accumulators over arbitrary targets.
std::vector<TargetAccumulator> separated_terms(const SeparatedFunction3& F, const HarmonicRule& hr,
                                               const UniformGrid3& grid, double t,
                                               const AxisTargets& targets, bool with_gradient) {
  const auto& p = hr.params;
  p.validate();
  grid.validate();
  if (std::abs(grid.h - hr.h) > 1e-14 * hr.h)
    throw ParameterError("pressure: grid spacing differs from the rule's h");
  const int K = grid.half_extent;
  int max_offset = 0;
  for (int a = 0; a < 3; ++a) max_offset = std::max(max_offset, targets.max_abs_index(a) + K);

  const std::size_t n_terms = F.rank();
  std::vector<std::array<std::vector<double>, 3>> samples(n_terms);
  for (std::size_t s = 0; s < n_terms; ++s)
    for (int j = 0; j < 3; ++j) samples[s][j] = sample_factor(F.terms()[s].factors[j], grid, t);

  const std::size_t n_out = targets.size();
  std::vector<TargetAccumulator> acc(n_terms);
  for (auto& a : acc) {
    a.pressure.assign(n_out, 0.0);
    if (with_gradient)
      for (auto& g : a.gradient) g.assign(n_out, 0.0);
  }

  const double cp = pressure_scale(p, hr.h);
  const double cg = gradient_scale(p, hr.h);
  std::array<AxisConvolution, 3> conv;
  std::vector<double> tmp;
  for (std::size_t q = 0; q < hr.rule.size(); ++q) {
    const double r = hr.rule.nodes[q];
    const double w = hr.rule.weights[q];
    const KernelTable table(p.M, p.D, r, max_offset, with_gradient);
    for (std::size_t s = 0; s < n_terms; ++s) {
      const double coef = F.terms()[s].coefficient;
      for (int j = 0; j < 3; ++j)
        convolve_axis(samples[s][j], K, targets.coords[j], targets.integral[j], p.M, p.D, r, &table,
                      with_gradient, conv[j]);
      accumulate_outer(cp * w * coef, conv[0].value, conv[1].value, conv[2].value, acc[s].pressure);
      if (!with_gradient) continue;
      for (int i = 0; i < 3; ++i) {
        tmp.resize(conv[i].value.size());
        for (std::size_t e = 0; e < tmp.size(); ++e) tmp[e] = conv[i].moment[e] + conv[i].derivative[e];
        std::array<std::span<const double>, 3> f{conv[0].value, conv[1].value, conv[2].value};
        f[i] = tmp;
        accumulate_outer(cg * w * coef, f[0], f[1], f[2], acc[s].gradient[i]);
      }
    }
  }
  return acc;
}

PressureFields to_fields(const TargetAccumulator& a, const UniformGrid3& grid,
                         const IndexWindow& out, bool with_gradient) {
  PressureFields f{GridField(grid, out, 1), {}};
  std::copy(a.pressure.begin(), a.pressure.end(), f.pressure.values().begin());
  if (with_gradient) {
    f.gradient = GridField(grid, out, 3);
    for (int i = 0; i < 3; ++i)
      std::copy(a.gradient[i].begin(), a.gradient[i].end(), f.gradient.component(i).begin());
  }
  return f;
}

} // namespace

HarmonicRule HarmonicRule::make(const CubatureParams& params, double h, const DEParams& de) {
  params.validate();
  if (!(h > 0.0)) throw ParameterError("harmonic rule: h must be positive");
  return HarmonicRule{de_halfline_rule(de), params, h};
}

double harmonic_basis(OrderIndex m, const Point3& x, const QuadRule& rule) {
  const double x2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  double sum = 0.0;
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const double r = rule.nodes[p];
    const QrEvaluator qr(m, r);
    sum += rule.weights[p] * std::exp(-x2 / (1.0 + r)) * qr.q(x[0]) * qr.q(x[1]) * qr.q(x[2]);
  }
  return 0.25 * inv_pi32 * sum;
}

double grad_harmonic_basis(int axis, OrderIndex m, const Point3& x, const QuadRule& rule) {
  if (axis < 0 || axis > 2) throw ParameterError("grad_harmonic_basis: axis must be 0, 1 or 2");
  const double x2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  double first = 0.0;
  double second = 0.0;
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const double r = rule.nodes[p];
    const QrEvaluator qr(m, r);
    const double e = rule.weights[p] * std::exp(-x2 / (1.0 + r));
    std::array<double, 3> q{}, dq{};
    for (int j = 0; j < 3; ++j) qr.both(x[j], q[j], dq[j]);
    first += e / (1.0 + r) * q[0] * q[1] * q[2];
    double others = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != axis) others *= q[j];
    second += e * dq[axis] * others;
  }
  return -x[axis] * 0.5 * inv_pi32 * first + 0.25 * inv_pi32 * second;
}

double pressure_cubature(const GridField& F, const HarmonicRule& hr, const Point3& x) {
  const auto& p = hr.params;
  if (F.components() != 1) throw ParameterError("pressure_cubature: scalar data expected");
  const double h = F.grid().h;
  const auto& w = F.window();
  const auto vals = F.values();
  std::array<std::vector<double>, 3> ker;
  double sum = 0.0;
  for (std::size_t q = 0; q < hr.rule.size(); ++q) {
    const double r = hr.rule.nodes[q];
    for (int a = 0; a < 3; ++a) {
      ker[a].resize(static_cast<std::size_t>(w.extent(a)));
      for (int m = w.lo[a]; m <= w.hi[a]; ++m)
        ker[a][static_cast<std::size_t>(m - w.lo[a])] =
            evaluate_kernel(p.M, p.D, r, x[a] / h - m, std::numeric_limits<double>::infinity()).value;
    }
    double inner = 0.0;
    std::size_t i = 0;
    for (std::size_t a = 0; a < ker[0].size(); ++a)
      for (std::size_t b = 0; b < ker[1].size(); ++b) {
        const double kab = ker[0][a] * ker[1][b];
        for (std::size_t c = 0; c < ker[2].size(); ++c) inner += vals[i++] * (kab * ker[2][c]);
      }
    sum += hr.rule.weights[q] * inner;
  }
  return pressure_scale(p, h) * sum;
}

Point3 grad_pressure_cubature(const GridField& F, const HarmonicRule& hr, const Point3& x) {
  const auto& p = hr.params;
  if (F.components() != 1) throw ParameterError("grad_pressure_cubature: scalar data expected");
  const double h = F.grid().h;
  const auto& w = F.window();
  const auto vals = F.values();
  std::array<std::vector<double>, 3> kv, kd;
  Point3 sum{0.0, 0.0, 0.0};
  for (std::size_t q = 0; q < hr.rule.size(); ++q) {
    const double r = hr.rule.nodes[q];
    for (int a = 0; a < 3; ++a) {
      kv[a].resize(static_cast<std::size_t>(w.extent(a)));
      kd[a].resize(kv[a].size());
      for (int m = w.lo[a]; m <= w.hi[a]; ++m) {
        const auto kp =
            evaluate_kernel(p.M, p.D, r, x[a] / h - m, std::numeric_limits<double>::infinity());
        kv[a][static_cast<std::size_t>(m - w.lo[a])] = kp.value;
        kd[a][static_cast<std::size_t>(m - w.lo[a])] = kp.moment + kp.derivative;
      }
    }
    Point3 inner{0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (std::size_t a = 0; a < kv[0].size(); ++a)
      for (std::size_t b = 0; b < kv[1].size(); ++b)
        for (std::size_t c = 0; c < kv[2].size(); ++c) {
          const double f = vals[i++];
          inner[0] += f * (kd[0][a] * kv[1][b] * kv[2][c]);
          inner[1] += f * (kv[0][a] * kd[1][b] * kv[2][c]);
          inner[2] += f * (kv[0][a] * kv[1][b] * kd[2][c]);
        }
    for (int d = 0; d < 3; ++d) sum[d] += hr.rule.weights[q] * inner[d];
  }
  const double cg = gradient_scale(p, h);
  return {cg * sum[0], cg * sum[1], cg * sum[2]};
}

std::vector<PressureFields> pressure_terms_separated(const SeparatedFunction3& F,
                                                     const HarmonicRule& hr,
                                                     const UniformGrid3& grid, double t,
                                                     const IndexWindow& out, bool with_gradient) {
  out.validate();
  const auto acc =
      separated_terms(F, hr, grid, t, AxisTargets::from_window(out.lo, out.hi), with_gradient);
  std::vector<PressureFields> fields;
  fields.reserve(acc.size());
  for (const auto& a : acc) fields.push_back(to_fields(a, grid, out, with_gradient));
  return fields;
}

PressureFields pressure_fields_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                         const UniformGrid3& grid, double t,
                                         const IndexWindow& out, bool with_gradient) {
  out.validate();
  const auto acc =
      separated_terms(F, hr, grid, t, AxisTargets::from_window(out.lo, out.hi), with_gradient);
  TargetAccumulator total;
  total.pressure.assign(out.size(), 0.0);
  if (with_gradient)
    for (auto& g : total.gradient) g.assign(out.size(), 0.0);
  for (std::size_t s = 0; s < acc.size(); ++s) {
    const double c = F.terms()[s].time_weight ? F.terms()[s].time_weight(t) : 1.0;
    for (std::size_t e = 0; e < out.size(); ++e) total.pressure[e] += c * acc[s].pressure[e];
    if (with_gradient)
      for (int i = 0; i < 3; ++i)
        for (std::size_t e = 0; e < out.size(); ++e) total.gradient[i][e] += c * acc[s].gradient[i][e];
  }
  return to_fields(total, grid, out, with_gradient);
}

GridField pressure_grid_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                  const UniformGrid3& grid, double t, const IndexWindow& out) {
  return pressure_fields_separated(F, hr, grid, t, out, false).pressure;
}

GridField grad_pressure_grid_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                       const UniformGrid3& grid, double t, const IndexWindow& out) {
  return pressure_fields_separated(F, hr, grid, t, out, true).gradient;
}

double pressure_point_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                const UniformGrid3& grid, double t, const Point3& x) {
  const auto acc = separated_terms(F, hr, grid, t, AxisTargets::from_point(x, grid.h), false);
  double sum = 0.0;
  for (std::size_t s = 0; s < acc.size(); ++s) {
    const double c = F.terms()[s].time_weight ? F.terms()[s].time_weight(t) : 1.0;
    sum += c * acc[s].pressure[0];
  }
  return sum;
}

Point3 grad_pressure_point_separated(const SeparatedFunction3& F, const HarmonicRule& hr,
                                     const UniformGrid3& grid, double t, const Point3& x) {
  const auto acc = separated_terms(F, hr, grid, t, AxisTargets::from_point(x, grid.h), true);
  Point3 sum{0.0, 0.0, 0.0};
  for (std::size_t s = 0; s < acc.size(); ++s) {
    const double c = F.terms()[s].time_weight ? F.terms()[s].time_weight(t) : 1.0;
    for (int i = 0; i < 3; ++i) sum[i] += c * acc[s].gradient[i][0];
  }
  return sum;
}

} // namespace aastokes
