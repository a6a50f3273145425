#include "aastokes/grid.hpp"

#include "aastokes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

namespace aastokes {

UniformGrid3 UniformGrid3::covering(double h, double radius) {
  if (!(h > 0.0) || !(radius > 0.0)) throw ParameterError("grid: h and radius must be positive");
  // The small slack keeps radius/h = integer from rounding up by one.
  const int k = static_cast<int>(std::ceil(radius / h - 1e-9));
  return UniformGrid3{h, std::max(k, 1)};
}

void UniformGrid3::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("grid: h must be positive");
  if (half_extent < 1) throw ParameterError("grid: half extent must be >= 1");
}

IndexWindow IndexWindow::full(const UniformGrid3& g) {
  const int k = g.half_extent;
  return IndexWindow{{-k, -k, -k}, {k, k, k}};
}

IndexWindow IndexWindow::single(const Index3& k) { return IndexWindow{k, k}; }

IndexWindow IndexWindow::cube(int half_extent) {
  return IndexWindow{{-half_extent, -half_extent, -half_extent},
                     {half_extent, half_extent, half_extent}};
}

std::size_t IndexWindow::size() const noexcept {
  std::size_t n = 1;
  for (int a = 0; a < 3; ++a) n *= static_cast<std::size_t>(std::max(0, extent(a)));
  return n;
}

bool IndexWindow::contains(const Index3& k) const noexcept {
  for (int a = 0; a < 3; ++a)
    if (k[a] < lo[a] || k[a] > hi[a]) return false;
  return true;
}

void IndexWindow::validate() const {
  for (int a = 0; a < 3; ++a)
    if (hi[a] < lo[a]) throw ParameterError("index window: hi < lo");
}

TimeGrid TimeGrid::with_margin(double tau, int ell_max, double D0, double margin) {
  if (!(tau > 0.0) || !(D0 > 0.0) || ell_max < 0)
    throw ParameterError("time grid: tau, D0 must be positive and ell >= 0");
  const int pad = static_cast<int>(std::ceil(margin * std::sqrt(D0)));
  return TimeGrid{tau, -pad, ell_max + pad};
}

void TimeGrid::validate() const {
  if (!(tau > 0.0)) throw ParameterError("time grid: tau must be positive");
  if (i_min > 0 || i_max < 0) throw ParameterError("time grid: need i_min <= 0 <= i_max");
}

GridField::GridField(UniformGrid3 grid, IndexWindow window, int components)
    : grid_(grid), window_(window), components_(components) {
  grid_.validate();
  window_.validate();
  if (components != 1 && components != 3) throw ParameterError("grid field: 1 or 3 components");
  values_.assign(window_.size() * static_cast<std::size_t>(components), 0.0);
}

std::span<double> GridField::component(int c) noexcept {
  return std::span<double>(values_).subspan(static_cast<std::size_t>(c) * points(), points());
}

std::span<const double> GridField::component(int c) const noexcept {
  return std::span<const double>(values_).subspan(static_cast<std::size_t>(c) * points(), points());
}

std::size_t GridField::offset(int c, const Index3& k) const noexcept {
  const auto n1 = static_cast<std::size_t>(window_.extent(1));
  const auto n2 = static_cast<std::size_t>(window_.extent(2));
  const auto a = static_cast<std::size_t>(k[0] - window_.lo[0]);
  const auto b = static_cast<std::size_t>(k[1] - window_.lo[1]);
  const auto d = static_cast<std::size_t>(k[2] - window_.lo[2]);
  return static_cast<std::size_t>(c) * points() + (a * n1 + b) * n2 + d;
}

Point3 GridField::point(const Index3& k) const noexcept {
  return {grid_.coordinate(k[0]), grid_.coordinate(k[1]), grid_.coordinate(k[2])};
}

double GridField::max_abs(int c) const noexcept {
  double m = 0.0;
  for (double v : component(c)) m = std::max(m, std::abs(v));
  return m;
}

double GridField::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

void GridField::require_same_shape(const GridField& other) const {
  if (other.components_ != components_ || other.window_.lo != window_.lo ||
      other.window_.hi != window_.hi || other.grid_.h != grid_.h)
    throw ParameterError("grid field: shape mismatch");
}

GridField& GridField::operator+=(const GridField& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridField& GridField::operator-=(const GridField& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GridField& GridField::operator*=(double s) noexcept {
  for (double& v : values_) v *= s;
  return *this;
}

Factor Factor::of(std::function<double(double)> f, std::function<double(double)> df) {
  Factor out;
  out.value = [f = std::move(f)](double x, double) { return f(x); };
  if (df) out.derivative = [df = std::move(df)](double x, double) { return df(x); };
  return out;
}

bool SeparatedTerm::spatially_static() const noexcept {
  return std::none_of(factors.begin(), factors.end(),
                      [](const Factor& f) { return f.time_dependent; });
}

bool SeparatedFunction3::spatially_static() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const SeparatedTerm& t) { return t.spatially_static(); });
}

double SeparatedFunction3::operator()(const Point3& x, double t) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    double v = term.weight(t);
    for (int j = 0; j < 3; ++j) v *= term.factors[j](x[j], t);
    sum += v;
  }
  return sum;
}

namespace {

std::string describe(const Point3& x, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << x[0] << ", " << x[1] << ", " << x[2] << "), t = " << t;
  return os.str();
}

double checked_eval(const PointEvaluator& f, const Point3& x, double t) {
  double v;
  try {
    v = f(x, t);
  } catch (const std::exception& e) {
    throw DataError("evaluator failed at " + describe(x, t) + ": " + e.what());
  }
  if (!std::isfinite(v)) throw DataError("evaluator returned a non-finite value at " + describe(x, t));
  return v;
}

} // namespace

GridField sample(const PointEvaluator& f, const UniformGrid3& grid, double t) {
  GridField out(grid, IndexWindow::full(grid), 1);
  auto vals = out.values();
  std::size_t i = 0;
  out.for_each_index([&](const Index3& k) { vals[i++] = checked_eval(f, out.point(k), t); });
  return out;
}

GridField sample(const std::array<PointEvaluator, 3>& f, const UniformGrid3& grid, double t) {
  GridField out(grid, IndexWindow::full(grid), 3);
  for (int c = 0; c < 3; ++c) {
    auto vals = out.component(c);
    std::size_t i = 0;
    out.for_each_index([&](const Index3& k) { vals[i++] = checked_eval(f[c], out.point(k), t); });
  }
  return out;
}

std::vector<double> sample_factor(const Factor& f, const UniformGrid3& grid, double t) {
  std::vector<double> out(static_cast<std::size_t>(grid.points_per_axis()));
  for (int m = -grid.half_extent; m <= grid.half_extent; ++m) {
    const double x = grid.coordinate(m);
    double v;
    try {
      v = f(x, t);
    } catch (const DataError&) {
      throw;
    } catch (const std::exception& e) {
      throw DataError("factor evaluation failed at x = " + std::to_string(x) + ": " + e.what());
    }
    if (!std::isfinite(v))
      throw DataError("factor is not finite at x = " + std::to_string(x));
    out[static_cast<std::size_t>(m + grid.half_extent)] = v;
  }
  return out;
}

SeparatedFunction3 separated_divergence(const SeparatedVector3& f) {
  SeparatedFunction3 out;
  for (int j = 0; j < 3; ++j) {
    for (const auto& term : f[j].terms()) {
      const Factor& fj = term.factors[j];
      if (!fj.has_derivative())
        throw ParameterError("separated_divergence: component " + std::to_string(j + 1) +
                             " has a factor without derivative");
      SeparatedTerm d = term;
      d.coefficient = -term.coefficient;
      Factor df;
      df.value = fj.derivative;
      df.time_dependent = fj.time_dependent;
      d.factors[j] = std::move(df);
      out.add(std::move(d));
    }
  }
  return out;
}

GridField finite_difference_divergence(const GridField& v) {
  if (v.components() != 3) throw ParameterError("divergence needs a 3-component field");
  GridField out(v.grid(), v.window(), 1);
  const auto& w = v.window();
  const double inv2h = 0.5 / v.grid().h;
  v.for_each_index([&](const Index3& k) {
    for (int a = 0; a < 3; ++a)
      if (k[a] == w.lo[a] || k[a] == w.hi[a]) return;
    double div = 0.0;
    for (int a = 0; a < 3; ++a) {
      Index3 kp = k, km = k;
      ++kp[a];
      --km[a];
      div += (v.at(a, kp) - v.at(a, km)) * inv2h;
    }
    out.at(0, k) = div;
  });
  return out;
}

Factor load_factor_csv(const std::filesystem::path& path, double h, int require_half_extent) {
  if (!(h > 0.0)) throw ParameterError("tabulated factor: h must be positive");
  std::ifstream in(path);
  if (!in) throw DataError("cannot open factor table " + path.string());
  auto table = std::make_shared<std::map<int, double>>();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    long long idx;
    double val;
    if (!(row >> idx >> val)) {
      if (lineno == 1) continue; // header
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": expected `index,value`");
    }
    if (!std::isfinite(val))
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": non-finite value");
    (*table)[static_cast<int>(idx)] = val;
  }
  if (require_half_extent >= 0) {
    for (int m = -require_half_extent; m <= require_half_extent; ++m)
      if (!table->count(m))
        throw DataError(path.string() + ": missing sample for index " + std::to_string(m));
  }
  Factor f;
  f.value = [table, h](double x, double) {
    const double idx = x / h;
    const double r = std::round(idx);
    if (std::abs(idx - r) > 1e-9)
      throw DataError("tabulated factor evaluated off the grid at x = " + std::to_string(x));
    auto it = table->find(static_cast<int>(r));
    if (it == table->end())
      throw DataError("tabulated factor has no sample at index " +
                      std::to_string(static_cast<int>(r)));
    return it->second;
  };
  return f;
}

} // namespace aastokes
