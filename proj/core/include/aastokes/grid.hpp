#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

namespace aastokes {

using Point3 = std::array<double, 3>;
using Index3 = std::array<int, 3>;

/// Cube-shaped uniform grid {h m : m in [-K, K]^3}.
struct UniformGrid3 {
  double h = 0.1;
  int half_extent = 65;

  /// Smallest grid with spacing h whose box reaches `radius` on every axis.
  static UniformGrid3 covering(double h, double radius);

  [[nodiscard]] int points_per_axis() const noexcept { return 2 * half_extent + 1; }
  [[nodiscard]] double coordinate(int m) const noexcept { return h * m; }
  [[nodiscard]] double radius() const noexcept { return h * half_extent; }
  void validate() const;
};

/// Axis-aligned box of grid indices, inclusive on both ends.
struct IndexWindow {
  Index3 lo{};
  Index3 hi{};

  static IndexWindow full(const UniformGrid3& g);
  static IndexWindow single(const Index3& k);
  static IndexWindow cube(int half_extent);

  [[nodiscard]] int extent(int axis) const noexcept { return hi[axis] - lo[axis] + 1; }
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] bool contains(const Index3& k) const noexcept;
  void validate() const;
};

/// Time samples {tau i : i_min <= i <= i_max}.
struct TimeGrid {
  double tau = 0.025;
  int i_min = 0;
  int i_max = 0;

  /// Samples needed by the space-time quasi-interpolant up to time index
  /// `ell_max`: a margin of ceil(margin * sqrt(D0)) indices on both sides.
  static TimeGrid with_margin(double tau, int ell_max, double D0, double margin = 6.5);

  [[nodiscard]] int count() const noexcept { return i_max - i_min + 1; }
  [[nodiscard]] double time(int i) const noexcept { return tau * i; }
  void validate() const;
};

/// Scalar or vector samples on an index window of a uniform grid.
/// Storage is component-major, then axis 0, 1, 2 (axis 2 fastest).
class GridField {
public:
  GridField() = default;
  GridField(UniformGrid3 grid, IndexWindow window, int components = 1);

  [[nodiscard]] const UniformGrid3& grid() const noexcept { return grid_; }
  [[nodiscard]] const IndexWindow& window() const noexcept { return window_; }
  [[nodiscard]] int components() const noexcept { return components_; }
  [[nodiscard]] std::size_t points() const noexcept { return window_.size(); }

  [[nodiscard]] std::span<double> values() noexcept { return values_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::span<double> component(int c) noexcept;
  [[nodiscard]] std::span<const double> component(int c) const noexcept;

  [[nodiscard]] std::size_t offset(int c, const Index3& k) const noexcept;
  [[nodiscard]] double& at(int c, const Index3& k) noexcept { return values_[offset(c, k)]; }
  [[nodiscard]] double at(int c, const Index3& k) const noexcept { return values_[offset(c, k)]; }
  [[nodiscard]] double at(const Index3& k) const noexcept { return at(0, k); }
  [[nodiscard]] Point3 point(const Index3& k) const noexcept;

  /// Calls f(k) for every index of the window in storage order.
  template <class F>
  void for_each_index(F&& f) const {
    for (int a = window_.lo[0]; a <= window_.hi[0]; ++a)
      for (int b = window_.lo[1]; b <= window_.hi[1]; ++b)
        for (int c = window_.lo[2]; c <= window_.hi[2]; ++c) f(Index3{a, b, c});
  }

  [[nodiscard]] double max_abs(int c) const noexcept;
  [[nodiscard]] double max_abs() const noexcept;

  GridField& operator+=(const GridField& other);
  GridField& operator-=(const GridField& other);
  GridField& operator*=(double s) noexcept;

private:
  void require_same_shape(const GridField& other) const;

  UniformGrid3 grid_{};
  IndexWindow window_{};
  int components_ = 1;
  std::vector<double> values_;
};

/// Univariate factor x -> f(x, t) of a separated term. The derivative in x
/// is optional; it is required by `separated_divergence`.
struct Factor {
  std::function<double(double, double)> value;
  std::function<double(double, double)> derivative;
  bool time_dependent = false;

  double operator()(double x, double t) const { return value(x, t); }
  [[nodiscard]] bool has_derivative() const noexcept { return static_cast<bool>(derivative); }

  /// Time-independent factor from closures of x only.
  static Factor of(std::function<double(double)> f, std::function<double(double)> df = {});
};

/// a * c(t) * F_1(x_1, t) F_2(x_2, t) F_3(x_3, t); an empty time weight means c = 1.
struct SeparatedTerm {
  double coefficient = 1.0;
  std::function<double(double)> time_weight;
  std::array<Factor, 3> factors;

  [[nodiscard]] double weight(double t) const {
    return time_weight ? coefficient * time_weight(t) : coefficient;
  }
  [[nodiscard]] bool spatially_static() const noexcept;
};

/// Rank-S sum of separated terms representing a density on R^3.
class SeparatedFunction3 {
public:
  SeparatedFunction3() = default;
  explicit SeparatedFunction3(std::vector<SeparatedTerm> terms) : terms_(std::move(terms)) {}

  [[nodiscard]] const std::vector<SeparatedTerm>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t rank() const noexcept { return terms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  /// True when no factor depends on t (time enters only through weights).
  [[nodiscard]] bool spatially_static() const noexcept;

  void add(SeparatedTerm term) { terms_.push_back(std::move(term)); }
  [[nodiscard]] double operator()(const Point3& x, double t) const;

private:
  std::vector<SeparatedTerm> terms_;
};

using SeparatedVector3 = std::array<SeparatedFunction3, 3>;
using PointEvaluator = std::function<double(const Point3&, double)>;

/// values[m] = f(h m, t) over the full grid.
GridField sample(const PointEvaluator& f, const UniformGrid3& grid, double t);

/// Three-component sample of a vector field.
GridField sample(const std::array<PointEvaluator, 3>& f, const UniformGrid3& grid, double t);

/// Samples of one factor at x = h m, m = -K..K.
std::vector<double> sample_factor(const Factor& f, const UniformGrid3& grid, double t);

/// F = -div f as a separated function of rank <= 3 * rank(f). Every factor
/// that is differentiated must provide its derivative.
SeparatedFunction3 separated_divergence(const SeparatedVector3& f);

/// Second-order central-difference divergence on the interior of a
/// three-component field; boundary points are zero.
GridField finite_difference_divergence(const GridField& v);

/// Tabulated univariate factor read from CSV rows `index,value` (header
/// optional), where x = h * index. Evaluating at x off the table raises
/// DataError. `require_half_extent` >= 0 demands rows for every index in
/// [-K, K].
Factor load_factor_csv(const std::filesystem::path& path, double h, int require_half_extent = -1);

} // namespace aastokes
