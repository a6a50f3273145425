#pragma once

#include "aastokes/stokes.hpp"
#include "aastokes_tools/config.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aastokes::tools {

struct ErrorRow {
  int M = 1;
  double h = 0.0;
  std::optional<double> tau;   ///< heat-source and stokes-full only
  double approx = 0.0;
  double exact = 0.0;
  double error = 0.0;
  std::optional<double> rate;  ///< log2(previous error / error); empty on the first row of each M
};

struct ErrorTable {
  Problem problem = Problem::heat_homog;
  std::vector<ErrorRow> rows;
};

/// Approximate and exact value of the configured quantity for one (M, h, tau).
/// For stokes-full `approx` is the largest velocity error component and
/// `exact` is zero.
struct PointValue {
  double approx;
  double exact;
};
PointValue evaluate_point(const StudyConfig& cfg, int M, double h, double tau);

/// Full study over cfg.M x cfg.h in config order. cfg must be resolved.
ErrorTable run_study(const StudyConfig& cfg);

/// CSV with header `M,h,tau,error,rate`, values at full precision.
void write_csv(const ErrorTable& table, std::ostream& out);
void write_csv_file(const ErrorTable& table, const std::filesystem::path& path);

/// Aligned text mirror, errors with 3 significant digits.
std::string format_text(const ErrorTable& table);

StokesProblem make_stokes_problem(StokesData data, double nu, double T);

/// Solves with the first (M, h, tau) of cfg and writes one CSV per output
/// time into `dir`. Returns the written paths.
std::vector<std::filesystem::path> run_solve(const StudyConfig& cfg, const std::vector<double>& times,
                                             const std::filesystem::path& dir);

} // namespace aastokes::tools
