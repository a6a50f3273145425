#pragma once

#include "aastokes/grid.hpp"
#include "aastokes/quadrature.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aastokes::tools {

/// Malformed or inconsistent configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File that cannot be read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Problem { heat_homog, pressure, grad_pressure, heat_source, stokes_full };

Problem parse_problem(const std::string& name);
std::string problem_name(Problem p);

/// Data of a full Stokes solve: the rotational initial velocity, the
/// potential forcing, both, or nothing.
enum class StokesData { rotation, gradient, both, zero };

StokesData parse_stokes_data(const std::string& name);

/// Settings of a convergence study or a solve. Unset optional values fall
/// back to the per-problem defaults of `resolved()`.
struct StudyConfig {
  Problem problem = Problem::heat_homog;
  std::vector<int> M{1, 2, 3, 4};
  std::vector<double> h{0.1, 0.05, 0.025, 0.0125, 0.00625};
  std::vector<double> tau;            ///< paired with h; default h / 4
  std::optional<double> D;            ///< 4 for heat problems, 5 for the pressure
  double D0 = 4.0;
  double nu = 1.0;
  Point3 point{1.2, 1.2, 1.2};
  double time = 1.0;
  int component = 2;                  ///< 1-based derivative axis for grad-pressure
  double radius = 6.5;
  DEParams de{};
  MoriParams mori{};
  double margin = 6.5;
  StokesData data = StokesData::both;
  std::optional<int> window;          ///< solve output cube half-extent; default full grid
  std::string out;

  /// Copy with defaults filled in; raises ConfigError when invalid.
  [[nodiscard]] StudyConfig resolved() const;
  [[nodiscard]] double shape() const { return D.value_or(4.0); }
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys raise.
std::map<std::string, std::string> read_key_values(const std::filesystem::path& path);

/// Applies one setting; the key names are those accepted in config files.
void apply_setting(StudyConfig& cfg, const std::string& key, const std::string& value);

StudyConfig load_config(const std::filesystem::path& path);

std::vector<double> parse_doubles(const std::string& text);
std::vector<int> parse_ints(const std::string& text);
Point3 parse_point(const std::string& text);

} // namespace aastokes::tools
