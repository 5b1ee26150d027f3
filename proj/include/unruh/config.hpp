#pragma once

// Command-line and config-file parsing for the `state`, `sweep` and
// `report` subcommands.  Token lists exclude the program and subcommand
// names.

#include "unruh/report.hpp"
#include "unruh/sweep.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unruh {

/// Bad flag, bad value, or conflicting options.  The message names the
/// offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when --help is given; carries the formatted help text.
struct HelpRequested {
  std::string text;
};

struct StateConfig {
  StateFamily family = Bell{};
  double r_a = 0.0;
  double r_b = 0.0;
  bool has_acceleration = false;
  std::vector<RegionSelector> regions = all_regions();
  std::vector<Measure> measures{Measure::Concurrence, Measure::Fidelity, Measure::Telp,
                                Measure::Purity, Measure::Separability};
};

struct SweepOptions {
  SweepConfig config;
  bool serial = false;  // use the single-threaded reference kernel
};

/// `--config FILE` loads a JSON object whose keys are long flag names
/// without the dashes; flags given on the command line take precedence.
SweepOptions parse_sweep_args(const std::vector<std::string>& args);
StateConfig parse_state_args(const std::vector<std::string>& args);
ReportConfig parse_report_args(const std::vector<std::string>& args);

/// Convenience wrapper returning only the sweep config.
SweepConfig parse_config(const std::vector<std::string>& args);

/// "a:b:n" with n >= 2.
Axis parse_range(const std::string& text, const std::string& field);

std::vector<Measure> parse_measures(const std::string& list);

}  // namespace unruh
