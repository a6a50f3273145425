#pragma once

#include "aastokes/special_functions.hpp"

#include <array>
#include <span>
#include <vector>

namespace aastokes {

/// Which one-dimensional kernel of the separated cubature formulas.
///   value:      e^{-d^2/(D(1+r))} Q_M(d/sqrt(D), r)                  (even)
///   moment:     -2 (d/sqrt(D)) / (1+r) * value                        (odd)
///   derivative: e^{-d^2/(D(1+r))} R_M(d/sqrt(D), r)                  (odd)
/// where d is the offset k - m in grid units.
enum class KernelKind { value, moment, derivative };

/// Default Gaussian cut-off: terms with d^2/(D(1+r)) above this are skipped.
inline constexpr double kernel_cutoff = 45.0;

/// Direct evaluation of the three kernels at a real offset d.
struct KernelPoint {
  double value;
  double moment;
  double derivative;
};
KernelPoint evaluate_kernel(OrderIndex m, double D, double r, double d, double cutoff = kernel_cutoff);

/// Tabulated kernels at integer offsets 0..reach for one (M, D, r).
/// Offsets beyond the Gaussian cut-off are zero and not stored.
class KernelTable {
public:
  KernelTable(OrderIndex m, double D, double r, int max_offset, bool with_derivatives,
              double cutoff = kernel_cutoff);

  [[nodiscard]] int reach() const noexcept { return reach_; }
  [[nodiscard]] double r() const noexcept { return r_; }

  [[nodiscard]] double value(int d) const noexcept {
    const int a = d < 0 ? -d : d;
    return a <= reach_ ? value_[static_cast<std::size_t>(a)] : 0.0;
  }
  [[nodiscard]] double moment(int d) const noexcept {
    const int a = d < 0 ? -d : d;
    if (a > reach_) return 0.0;
    return d < 0 ? -moment_[static_cast<std::size_t>(a)] : moment_[static_cast<std::size_t>(a)];
  }
  [[nodiscard]] double derivative(int d) const noexcept {
    const int a = d < 0 ? -d : d;
    if (a > reach_) return 0.0;
    return d < 0 ? -deriv_[static_cast<std::size_t>(a)] : deriv_[static_cast<std::size_t>(a)];
  }
  [[nodiscard]] double get(KernelKind kind, int d) const noexcept {
    switch (kind) {
      case KernelKind::value: return value(d);
      case KernelKind::moment: return moment(d);
      case KernelKind::derivative: return derivative(d);
    }
    return 0.0;
  }
  [[nodiscard]] bool has_derivatives() const noexcept { return !moment_.empty(); }

private:
  int reach_ = 0;
  double r_ = 0.0;
  std::vector<double> value_;
  std::vector<double> moment_;
  std::vector<double> deriv_;
};

/// Discrete convolution of samples f[m], m = -K..K (stored at m + K), with a
/// tabulated kernel, evaluated at integer target k: sum_m f[m] kernel(k - m).
/// Summation runs over ascending m.
double convolve_at(std::span<const double> samples, int K, int k, const KernelTable& table,
                   KernelKind kind);

/// Same at every integer target lo..hi, written to out[k - lo].
void convolve_range(std::span<const double> samples, int K, int lo, int hi,
                    const KernelTable& table, KernelKind kind, std::span<double> out);

/// All three kernel convolutions at a real target position x (grid units),
/// with kernels evaluated directly. Used for off-grid evaluation points.
std::array<double, 3> convolve_at_real(std::span<const double> samples, int K, double x,
                                       OrderIndex m, double D, double r, bool with_derivatives,
                                       double cutoff = kernel_cutoff);

/// Target positions of a separated evaluation in grid units, one list per
/// axis. Either all targets of an axis are integers (grid-aligned) or the
/// evaluation falls back to direct kernel evaluation.
struct AxisTargets {
  std::array<std::vector<double>, 3> coords;
  std::array<bool, 3> integral{true, true, true};

  static AxisTargets from_window(const std::array<int, 3>& lo, const std::array<int, 3>& hi);
  static AxisTargets from_point(const std::array<double, 3>& x, double h);

  [[nodiscard]] std::size_t size() const noexcept {
    return coords[0].size() * coords[1].size() * coords[2].size();
  }
  [[nodiscard]] int max_abs_index(int axis) const noexcept;
};

/// Per-axis convolutions of one set of samples at all targets of the axis:
/// out[kind][target]. Chooses the tabulated path when targets are integral.
struct AxisConvolution {
  std::vector<double> value;
  std::vector<double> moment;
  std::vector<double> derivative;
};
void convolve_axis(std::span<const double> samples, int K, const std::vector<double>& targets,
                   bool integral, OrderIndex m, double D, double r, const KernelTable* table,
                   bool with_derivatives, AxisConvolution& out);

/// out[a, b, c] += coef * x[a] * y[b] * z[c] with c fastest.
void accumulate_outer(double coef, std::span<const double> x, std::span<const double> y,
                      std::span<const double> z, std::span<double> out);

} // namespace aastokes
