#include "aastokes_tools/study.hpp"

#include "aastokes/errors.hpp"
#include "aastokes/harmonic.hpp"
#include "aastokes/heat.hpp"
#include "aastokes/poisson.hpp"
#include "aastokes/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace aastokes::tools {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

int time_index(double t, double tau) {
  const double q = t / tau;
  const double r = std::round(q);
  if (std::abs(q - r) > 1e-9 * std::max(1.0, q))
    throw ConfigError("time " + fmt("%g", t) + " is not a multiple of tau = " + fmt("%g", tau));
  return static_cast<int>(r);
}

Index3 grid_index(const Point3& x, double h) {
  Index3 k{};
  for (int a = 0; a < 3; ++a) {
    const double q = x[a] / h;
    k[a] = static_cast<int>(std::round(q));
    if (std::abs(q - k[a]) > 1e-9 * std::max(1.0, std::abs(q)))
      throw ConfigError("stokes-full needs the evaluation point on every grid");
  }
  return k;
}

Point3 exact_velocity(StokesData data, const Point3& x, double t, double nu) {
  if (data == StokesData::rotation || data == StokesData::both)
    return problems::rotational_gaussian_velocity(x, t, nu);
  return {0.0, 0.0, 0.0};
}

StokesSettings settings_for(const StudyConfig& cfg, int M, double h, double tau) {
  StokesSettings s;
  s.params.M = OrderIndex(M);
  s.params.D = cfg.shape();
  s.params.D0 = cfg.D0;
  s.h = h;
  s.tau = tau;
  s.radius = cfg.radius;
  s.de = cfg.de;
  s.mori = cfg.mori;
  s.margin = cfg.margin;
  return s;
}

} // namespace

StokesProblem make_stokes_problem(StokesData data, double nu, double T) {
  StokesProblem p;
  p.nu = nu;
  p.T = T;
  if (data == StokesData::rotation || data == StokesData::both) p.g = problems::rotational_gaussian();
  if (data == StokesData::gradient || data == StokesData::both) {
    p.f = problems::gradient_forcing();
    p.F = problems::gradient_forcing_divergence();
  }
  return p;
}

PointValue evaluate_point(const StudyConfig& cfg, int M, double h, double tau) {
  CubatureParams p;
  p.M = OrderIndex(M);
  p.D = cfg.shape();
  p.D0 = cfg.D0;
  p.nu = cfg.nu;
  const UniformGrid3 grid = UniformGrid3::covering(h, cfg.radius);
  const Point3& x = cfg.point;
  const double t = cfg.time;
  switch (cfg.problem) {
    case Problem::heat_homog: {
      const auto g = problems::rotational_gaussian();
      return {poisson_point_separated(g[0], p, grid, t, x),
              problems::rotational_gaussian_velocity(x, t, cfg.nu)[0]};
    }
    case Problem::pressure: {
      const auto hr = HarmonicRule::make(p, h, cfg.de);
      return {pressure_point_separated(problems::gradient_forcing_divergence(), hr, grid, t, x),
              problems::gradient_forcing_pressure(x, t)};
    }
    case Problem::grad_pressure: {
      const auto hr = HarmonicRule::make(p, h, cfg.de);
      const int c = cfg.component - 1;
      return {grad_pressure_point_separated(problems::gradient_forcing_divergence(), hr, grid, t, x)[c],
              problems::gradient_forcing_pressure_gradient(x, t)[c]};
    }
    case Problem::heat_source: {
      const int ell = time_index(t, tau);
      if (ell == 0) return {0.0, problems::heat_source_solution(x, t)};
      const QuadRule rule = mori_finite_rule(tau * ell, cfg.mori);
      return {heat_point_separated(problems::heat_source(), p, grid, tau, ell, rule, x, cfg.margin),
              problems::heat_source_solution(x, t)};
    }
    case Problem::stokes_full: {
      time_index(t, tau);
      StokesSettings s = settings_for(cfg, M, h, tau);
      s.output = IndexWindow::single(grid_index(x, h));
      const auto sol = solve(make_stokes_problem(cfg.data, cfg.nu, t), s, {t});
      const Point3 ex = exact_velocity(cfg.data, x, t, cfg.nu);
      double err = 0.0;
      for (int c = 0; c < 3; ++c) err = std::max(err, std::abs(sol.velocity[0].values()[static_cast<std::size_t>(c)] - ex[c]));
      return {err, 0.0};
    }
  }
  throw ConfigError("unknown problem");
}

ErrorTable run_study(const StudyConfig& cfg) {
  ErrorTable table;
  table.problem = cfg.problem;
  const bool timed = cfg.problem == Problem::heat_source || cfg.problem == Problem::stokes_full;
  for (int M : cfg.M) {
    std::optional<double> prev;
    for (std::size_t k = 0; k < cfg.h.size(); ++k) {
      ErrorRow row;
      row.M = M;
      row.h = cfg.h[k];
      if (timed) row.tau = cfg.tau[k];
      const PointValue v = evaluate_point(cfg, M, cfg.h[k], cfg.tau[k]);
      row.approx = v.approx;
      row.exact = v.exact;
      row.error = std::abs(v.approx - v.exact);
      if (!std::isfinite(row.error))
        throw NumericError("non-finite result for M = " + std::to_string(M) + ", h = " + fmt("%g", row.h));
      if (prev && row.error > 0.0 && *prev > 0.0) row.rate = std::log2(*prev / row.error);
      prev = row.error;
      table.rows.push_back(row);
    }
  }
  return table;
}

void write_csv(const ErrorTable& table, std::ostream& out) {
  out << "M,h,tau,error,rate\n";
  for (const auto& r : table.rows) {
    out << r.M << ',' << fmt("%.17g", r.h) << ',' << (r.tau ? fmt("%.17g", *r.tau) : "") << ','
        << fmt("%.17g", r.error) << ',' << (r.rate ? fmt("%.17g", *r.rate) : "") << '\n';
  }
}

void write_csv_file(const ErrorTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(table, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string format_text(const ErrorTable& table) {
  std::vector<int> ms;
  std::vector<std::pair<double, std::optional<double>>> hs;
  for (const auto& r : table.rows) {
    if (std::find(ms.begin(), ms.end(), r.M) == ms.end()) ms.push_back(r.M);
    const bool seen = std::any_of(hs.begin(), hs.end(), [&](const auto& e) { return e.first == r.h; });
    if (!seen) hs.emplace_back(r.h, r.tau);
  }
  const bool timed = !hs.empty() && hs.front().second.has_value();
  std::ostringstream os;
  os << problem_name(table.problem) << "\n";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%8s", "1/h");
  os << buf;
  if (timed) {
    std::snprintf(buf, sizeof buf, "%8s", "1/tau");
    os << buf;
  }
  for (int m : ms) {
    std::snprintf(buf, sizeof buf, " | %10s %5s", ("M=" + std::to_string(m) + " err").c_str(), "rate");
    os << buf;
  }
  os << "\n";
  for (const auto& [h, tau] : hs) {
    std::snprintf(buf, sizeof buf, "%8.4g", 1.0 / h);
    os << buf;
    if (timed) {
      std::snprintf(buf, sizeof buf, "%8.4g", 1.0 / *tau);
      os << buf;
    }
    for (int m : ms) {
      const auto it = std::find_if(table.rows.begin(), table.rows.end(),
                                   [&](const ErrorRow& r) { return r.M == m && r.h == h; });
      if (it == table.rows.end()) {
        std::snprintf(buf, sizeof buf, " | %10s %5s", "", "");
      } else {
        const std::string rate = it->rate ? fmt("%5.2f", *it->rate) : "";
        std::snprintf(buf, sizeof buf, " | %10.2e %5s", it->error, rate.c_str());
      }
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<std::filesystem::path> run_solve(const StudyConfig& cfg, const std::vector<double>& times,
                                             const std::filesystem::path& dir) {
  if (times.empty()) throw ConfigError("no output times given");
  const double h = cfg.h.front();
  const double tau = cfg.tau.front();
  StokesSettings s = settings_for(cfg, cfg.M.front(), h, tau);
  if (cfg.window) s.output = IndexWindow::cube(*cfg.window);
  for (double t : times) time_index(t, tau);
  const double T = *std::max_element(times.begin(), times.end());
  const auto sol = solve(make_stokes_problem(cfg.data, cfg.nu, T), s, times);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (std::size_t n = 0; n < times.size(); ++n) {
    const auto path = dir / ("solution_t" + fmt("%g", times[n]) + ".csv");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "i,j,k,x,y,z,u1,u2,u3,P,dPx,dPy,dPz\n";
    const GridField& u = sol.velocity[n];
    const GridField& P = sol.pressure[n];
    const GridField& G = sol.pressure_gradient[n];
    u.for_each_index([&](const Index3& k) {
      const Point3 x = u.point(k);
      out << k[0] << ',' << k[1] << ',' << k[2];
      for (double v : {x[0], x[1], x[2], u.at(0, k), u.at(1, k), u.at(2, k), P.at(k), G.at(0, k),
                       G.at(1, k), G.at(2, k)})
        out << ',' << fmt("%.17g", v);
      out << '\n';
    });
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
    written.push_back(path);
  }
  return written;
}

} // namespace aastokes::tools
