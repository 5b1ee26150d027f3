#pragma once

// Parameter sweeps over accelerations (and optionally one family parameter).
//
// run_sweep evaluates grid points with OpenMP; run_sweep_serial is the
// single-threaded reference.  Both return rows in the same order and are
// bit-identical.

#include "unruh/channel.hpp"
#include "unruh/measures.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unruh {

enum class AccMode { Independent, Locked, OneStationary };
enum class Observer { Alice, Rob };
enum class Measure { Concurrence, Fidelity, Telp, Purity, Separability };
enum class OutputFormat { Csv, Plot, Both };
enum class FamilyParam { X, P, Cxx, Cyy, Czz };

std::string to_string(Measure m);
std::string to_string(FamilyParam p);
std::string to_string(AccMode m);

/// Closed interval sampled at `steps` points; endpoints are returned
/// exactly, interior points by linear interpolation.
struct Axis {
  double min = 0.0;
  double max = kQuarterPi;
  int steps = 64;

  double at(int i) const;
};

struct FamilyAxis {
  FamilyParam param;
  Axis axis;
};

struct SweepConfig {
  StateFamily family = Bell{};
  std::optional<FamilyAxis> family_grid;
  int acc_steps = 64;
  AccMode mode = AccMode::Independent;
  Observer stationary = Observer::Rob;  // only read in OneStationary mode
  std::vector<RegionSelector> regions{RegionSelector{}};
  std::vector<Measure> measures{Measure::Concurrence, Measure::Fidelity, Measure::Telp,
                                Measure::Purity};
  std::string out_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
  std::string label;     // figure preset name, if any

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SweepRow {
  double r_a = 0.0;
  double r_b = 0.0;
  double param = 0.0;
  RegionSelector region;
  double concurrence = 0.0;
  double fidelity = 0.0;
  double telp = 0.0;
  double purity = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Name of the <param> CSV column for this config.
std::string param_column(const SweepConfig& cfg);

/// The family with `param` replaced by `value`.
StateFamily with_param(const StateFamily& f, FamilyParam param, double value);

/// Value written in the <param> column when the family is not swept.
double fixed_param_value(const StateFamily& f);

std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg);

/// Number of rows run_sweep will produce.
std::size_t sweep_size(const SweepConfig& cfg);

// CSV: header `r_a,r_b,<param>,region,concurrence,fidelity,telp,purity`,
// values with 12 significant digits, '\n' line endings.

void emit_csv(std::span<const SweepRow> rows, const std::string& param_name, std::ostream& out);
void emit_csv(std::span<const SweepRow> rows, const std::string& param_name,
              const std::string& path);

struct CsvTable {
  std::string param_name;
  std::vector<SweepRow> rows;
};

CsvTable read_csv(std::istream& in);

/// Figure presets reproducing the published surfaces: "1", "2a", "2b",
/// "3", "4", "5", "6", "7".
SweepConfig figure_preset(const std::string& name);
const std::vector<std::string>& figure_names();

}  // namespace unruh
