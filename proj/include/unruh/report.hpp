#pragma once

// Regression report comparing the closed-form expressions of the original
// derivation (region matrices, Bloch coefficients, fidelities, concurrence
// and teleportation formulas) against the canonical numerical pipeline.

#include <cstdint>
#include <string>
#include <vector>

namespace unruh {

struct ReportConfig {
  int grid = 16;       // (r_a, r_b) points per axis
  int samples = 100;   // random states / family parameters
  std::uint64_t seed = 1;
  std::string out_path;  // empty: stdout

  void validate() const;
};

enum class ItemStatus { Agrees, KnownDiscrepancy, Unexpected };

std::string to_string(ItemStatus s);

struct ReportItem {
  std::string group;
  std::string item;
  double max_deviation = 0.0;
  bool expected_discrepant = false;

  ItemStatus status() const;
};

struct DiscrepancyReport {
  ReportConfig config;
  std::vector<ReportItem> items;

  /// nullptr if absent.
  const ReportItem* find(const std::string& group, const std::string& item) const;
  std::size_t count(ItemStatus s) const;
  std::string to_text() const;
};

/// Deviations at or below this count as agreement.
inline constexpr double kReportTolerance = 1e-12;

DiscrepancyReport discrepancy_report(const ReportConfig& cfg);

}  // namespace unruh
