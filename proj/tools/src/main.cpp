#include "aastokes/errors.hpp"
#include "aastokes_tools/config.hpp"
#include "aastokes_tools/study.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

enum Exit { ok = 0, config_error = 2, numeric_error = 3, io_error = 4 };

using aastokes::tools::StudyConfig;

// Flags win over the config file.
StudyConfig merge(const std::string& file, const std::map<std::string, std::string>& flags) {
  StudyConfig cfg;
  if (!file.empty()) cfg = aastokes::tools::load_config(file);
  for (const auto& [k, v] : flags) aastokes::tools::apply_setting(cfg, k, v);
  return cfg.resolved();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-analytic cubature solver for the non-stationary Stokes Cauchy problem"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string config;
  std::map<std::string, std::string> flags;
  std::string problem, ms, hs, taus, point, time, out;

  auto* study = app.add_subcommand("study", "Convergence study at one point against the exact solution");
  study->add_option("--config", config, "key = value configuration file");
  study->add_option("--problem", problem, "heat-homog | pressure | grad-pressure | heat-source | stokes-full");
  study->add_option("--M", ms, "comma-separated order indices");
  study->add_option("--h", hs, "comma-separated, strictly decreasing grid sizes");
  study->add_option("--tau", taus, "comma-separated time steps paired with --h");
  study->add_option("--point", point, "evaluation point x,y,z");
  study->add_option("--time", time, "evaluation time");
  study->add_option("--out", out, "CSV output file");

  std::string times, dir;
  auto* solve = app.add_subcommand("solve", "Full Stokes solve written as CSV grid dumps");
  solve->add_option("--config", config, "key = value configuration file");
  solve->add_option("--times", times, "comma-separated output times")->required();
  solve->add_option("--out", dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::config_error;
  }

  try {
    if (*study) {
      const std::pair<const char*, std::string*> opts[] = {
          {"problem", &problem}, {"M", &ms}, {"h", &hs}, {"tau", &taus},
          {"point", &point}, {"time", &time}, {"out", &out}};
      for (const auto& [key, value] : opts)
        if (!study->get_option("--" + std::string(key))->empty()) flags[key] = *value;
      const StudyConfig cfg = merge(config, flags);
      const auto table = aastokes::tools::run_study(cfg);
      std::cout << aastokes::tools::format_text(table);
      if (!cfg.out.empty()) aastokes::tools::write_csv_file(table, cfg.out);
    } else {
      const StudyConfig cfg = merge(config, flags);
      const auto paths = aastokes::tools::run_solve(cfg, aastokes::tools::parse_doubles(times), dir);
      for (const auto& p : paths) std::cout << p.string() << "\n";
    }
  } catch (const aastokes::tools::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return Exit::config_error;
  } catch (const aastokes::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return Exit::config_error;
  } catch (const aastokes::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return Exit::config_error;
  } catch (const aastokes::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return Exit::numeric_error;
  } catch (const aastokes::tools::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return Exit::io_error;
  }
  return Exit::ok;
}
