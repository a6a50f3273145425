#include "aastokes_tools/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aastokes::tools {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    throw ConfigError("not a number: '" + s + "'");
  return v;
}

int to_int(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || v < -1000000000 || v > 1000000000)
    throw ConfigError("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

} // namespace

Problem parse_problem(const std::string& name) {
  if (name == "heat-homog") return Problem::heat_homog;
  if (name == "pressure") return Problem::pressure;
  if (name == "grad-pressure") return Problem::grad_pressure;
  if (name == "heat-source") return Problem::heat_source;
  if (name == "stokes-full") return Problem::stokes_full;
  throw ConfigError("unknown problem '" + name + "'");
}

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::heat_homog: return "heat-homog";
    case Problem::pressure: return "pressure";
    case Problem::grad_pressure: return "grad-pressure";
    case Problem::heat_source: return "heat-source";
    case Problem::stokes_full: return "stokes-full";
  }
  return "?";
}

StokesData parse_stokes_data(const std::string& name) {
  if (name == "rotation") return StokesData::rotation;
  if (name == "gradient") return StokesData::gradient;
  if (name == "both") return StokesData::both;
  if (name == "zero") return StokesData::zero;
  throw ConfigError("unknown stokes data '" + name + "'");
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text)) out.push_back(to_double(s));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text)) out.push_back(to_int(s));
  return out;
}

Point3 parse_point(const std::string& text) {
  const auto v = parse_doubles(text);
  if (v.size() != 3) throw ConfigError("a point needs three coordinates: '" + text + "'");
  return {v[0], v[1], v[2]};
}

std::map<std::string, std::string> read_key_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::map<std::string, std::string> kv;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_setting(StudyConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "problem") cfg.problem = parse_problem(value);
  else if (key == "M") cfg.M = parse_ints(value);
  else if (key == "h") cfg.h = parse_doubles(value);
  else if (key == "tau") cfg.tau = parse_doubles(value);
  else if (key == "D") cfg.D = to_double(value);
  else if (key == "D0") cfg.D0 = to_double(value);
  else if (key == "nu") cfg.nu = to_double(value);
  else if (key == "point") cfg.point = parse_point(value);
  else if (key == "time") cfg.time = to_double(value);
  else if (key == "component") cfg.component = to_int(value);
  else if (key == "radius") cfg.radius = to_double(value);
  else if (key == "de.a") cfg.de.a = to_double(value);
  else if (key == "de.b") cfg.de.b = to_double(value);
  else if (key == "de.kappa") cfg.de.kappa = to_double(value);
  else if (key == "de.n") cfg.de.n = to_int(value);
  else if (key == "mori.kappa") cfg.mori.kappa = to_double(value);
  else if (key == "mori.n") cfg.mori.n = to_int(value);
  else if (key == "margin") cfg.margin = to_double(value);
  else if (key == "data") cfg.data = parse_stokes_data(value);
  else if (key == "window") cfg.window = to_int(value);
  else if (key == "out") cfg.out = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

StudyConfig load_config(const std::filesystem::path& path) {
  StudyConfig cfg;
  for (const auto& [k, v] : read_key_values(path)) apply_setting(cfg, k, v);
  return cfg;
}

StudyConfig StudyConfig::resolved() const {
  StudyConfig c = *this;
  if (!c.D) c.D = (c.problem == Problem::pressure || c.problem == Problem::grad_pressure) ? 5.0 : 4.0;
  if (c.M.empty()) throw ConfigError("the M list is empty");
  for (int m : c.M)
    if (m < 1 || m > 10) throw ConfigError("M must lie in 1..10");
  if (c.h.empty()) throw ConfigError("the h list is empty");
  for (std::size_t k = 0; k < c.h.size(); ++k) {
    if (!(c.h[k] > 0.0)) throw ConfigError("h must be positive");
    if (k > 0 && !(c.h[k] < c.h[k - 1])) throw ConfigError("the h list must be strictly decreasing");
  }
  if (c.tau.empty())
    for (double h : c.h) c.tau.push_back(h / 4.0);
  if (c.tau.size() != c.h.size()) throw ConfigError("the tau list must pair with the h list");
  for (double t : c.tau)
    if (!(t > 0.0)) throw ConfigError("tau must be positive");
  if (!(*c.D >= 1.0)) throw ConfigError("D must be at least 1");
  if (!(c.D0 > 0.0)) throw ConfigError("D0 must be positive");
  if (!(c.nu > 0.0)) throw ConfigError("nu must be positive");
  if (!(c.time >= 0.0)) throw ConfigError("time must be non-negative");
  if (c.component < 1 || c.component > 3) throw ConfigError("component must be 1, 2 or 3");
  if (!(c.radius > 0.0)) throw ConfigError("radius must be positive");
  if (!(c.margin > 0.0)) throw ConfigError("margin must be positive");
  if (c.window && *c.window < 0) throw ConfigError("window must be non-negative");
  try {
    c.de.validate();
    c.mori.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return c;
}

} // namespace aastokes::tools
