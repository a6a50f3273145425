#include "aastokes/kernels.hpp"

#include "aastokes/errors.hpp"

#include <algorithm>
#include <cmath>

namespace aastokes {

KernelPoint evaluate_kernel(OrderIndex m, double D, double r, double d, double cutoff) {
  const double scale = D * (1.0 + r);
  const double arg = d * d / scale;
  if (arg > cutoff) return {0.0, 0.0, 0.0};
  const QrEvaluator qr(m, r);
  const double y = d / std::sqrt(D);
  double q, dq;
  qr.both(y, q, dq);
  const double g = std::exp(-arg);
  const double value = g * q;
  return {value, -2.0 * y / (1.0 + r) * value, g * dq};
}

KernelTable::KernelTable(OrderIndex m, double D, double r, int max_offset, bool with_derivatives,
                         double cutoff)
    : r_(r) {
  if (!(D > 0.0)) throw ParameterError("kernel: D must be positive");
  if (max_offset < 0) max_offset = 0;
  const double scale = D * (1.0 + r);
  const double limit = std::sqrt(cutoff * scale);
  reach_ = limit >= static_cast<double>(max_offset) ? max_offset : static_cast<int>(std::floor(limit));
  const auto n = static_cast<std::size_t>(reach_ + 1);
  value_.resize(n);
  if (with_derivatives) {
    moment_.resize(n);
    deriv_.resize(n);
  }
  const QrEvaluator qr(m, r);
  const double inv_sqrt_d = 1.0 / std::sqrt(D);
  const double inv_onep = 1.0 / (1.0 + r);
  for (int d = 0; d <= reach_; ++d) {
    const double dd = static_cast<double>(d);
    const double g = std::exp(-dd * dd / scale);
    const double y = dd * inv_sqrt_d;
    double q, dq;
    qr.both(y, q, dq);
    const auto i = static_cast<std::size_t>(d);
    value_[i] = g * q;
    if (with_derivatives) {
      moment_[i] = -2.0 * y * inv_onep * value_[i];
      deriv_[i] = g * dq;
    }
  }
}

double convolve_at(std::span<const double> samples, int K, int k, const KernelTable& table,
                   KernelKind kind) {
  const int lo = std::max(-K, k - table.reach());
  const int hi = std::min(K, k + table.reach());
  double sum = 0.0;
  switch (kind) {
    case KernelKind::value:
      for (int m = lo; m <= hi; ++m) sum += samples[static_cast<std::size_t>(m + K)] * table.value(k - m);
      break;
    case KernelKind::moment:
      for (int m = lo; m <= hi; ++m) sum += samples[static_cast<std::size_t>(m + K)] * table.moment(k - m);
      break;
    case KernelKind::derivative:
      for (int m = lo; m <= hi; ++m)
        sum += samples[static_cast<std::size_t>(m + K)] * table.derivative(k - m);
      break;
  }
  return sum;
}

void convolve_range(std::span<const double> samples, int K, int lo, int hi,
                    const KernelTable& table, KernelKind kind, std::span<double> out) {
  for (int k = lo; k <= hi; ++k)
    out[static_cast<std::size_t>(k - lo)] = convolve_at(samples, K, k, table, kind);
}

std::array<double, 3> convolve_at_real(std::span<const double> samples, int K, double x,
                                       OrderIndex m, double D, double r, bool with_derivatives,
                                       double cutoff) {
  const double limit = std::sqrt(cutoff * D * (1.0 + r));
  // clamp before the int cast
  const int lo = static_cast<int>(std::max(static_cast<double>(-K), std::floor(x - limit)));
  const int hi = static_cast<int>(std::min(static_cast<double>(K), std::ceil(x + limit)));
  std::array<double, 3> sum{0.0, 0.0, 0.0};
  for (int mm = lo; mm <= hi; ++mm) {
    const KernelPoint kp = evaluate_kernel(m, D, r, x - mm, cutoff);
    const double f = samples[static_cast<std::size_t>(mm + K)];
    sum[0] += f * kp.value;
    if (with_derivatives) {
      sum[1] += f * kp.moment;
      sum[2] += f * kp.derivative;
    }
  }
  return sum;
}

AxisTargets AxisTargets::from_window(const std::array<int, 3>& lo, const std::array<int, 3>& hi) {
  AxisTargets t;
  for (int a = 0; a < 3; ++a) {
    for (int k = lo[a]; k <= hi[a]; ++k) t.coords[a].push_back(static_cast<double>(k));
    t.integral[a] = true;
  }
  return t;
}

AxisTargets AxisTargets::from_point(const std::array<double, 3>& x, double h) {
  AxisTargets t;
  for (int a = 0; a < 3; ++a) {
    const double k = x[a] / h;
    const double kr = std::round(k);
    const bool on_grid = std::abs(k - kr) <= 1e-9 * std::max(1.0, std::abs(k));
    t.coords[a] = {on_grid ? kr : k};
    t.integral[a] = on_grid;
  }
  return t;
}

int AxisTargets::max_abs_index(int axis) const noexcept {
  double m = 0.0;
  for (double c : coords[axis]) m = std::max(m, std::abs(c));
  return static_cast<int>(std::ceil(m));
}

void convolve_axis(std::span<const double> samples, int K, const std::vector<double>& targets,
                   bool integral, OrderIndex m, double D, double r, const KernelTable* table,
                   bool with_derivatives, AxisConvolution& out) {
  const std::size_t n = targets.size();
  out.value.assign(n, 0.0);
  if (with_derivatives) {
    out.moment.assign(n, 0.0);
    out.derivative.assign(n, 0.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (integral && table) {
      const int k = static_cast<int>(targets[i]);
      out.value[i] = convolve_at(samples, K, k, *table, KernelKind::value);
      if (with_derivatives) {
        out.moment[i] = convolve_at(samples, K, k, *table, KernelKind::moment);
        out.derivative[i] = convolve_at(samples, K, k, *table, KernelKind::derivative);
      }
    } else {
      const auto s = convolve_at_real(samples, K, targets[i], m, D, r, with_derivatives);
      out.value[i] = s[0];
      if (with_derivatives) {
        out.moment[i] = s[1];
        out.derivative[i] = s[2];
      }
    }
  }
}

void accumulate_outer(double coef, std::span<const double> x, std::span<const double> y,
                      std::span<const double> z, std::span<double> out) {
  const std::size_t ny = y.size();
  const std::size_t nz = z.size();
  for (std::size_t a = 0; a < x.size(); ++a) {
    const double ca = coef * x[a];
    if (ca == 0.0) continue;
    for (std::size_t b = 0; b < ny; ++b) {
      const double cb = ca * y[b];
      double* row = out.data() + (a * ny + b) * nz;
      for (std::size_t c = 0; c < nz; ++c) row[c] += cb * z[c];
    }
  }
}

} // namespace aastokes
