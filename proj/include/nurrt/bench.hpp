#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nurrt {

// One benchmark run. Serialized with the fixed header
// planner,seed,cell_size,n_regions,tree_size,iterations,collision_checks,
// time_ms,feasible_len,smoothed_len,status
struct CsvRow {
  std::string planner;
  std::uint64_t seed = 0;
  double cell_size = 0.0;
  std::size_t n_regions = 0;
  std::size_t tree_size = 0;
  std::size_t iterations = 0;
  std::size_t collision_checks = 0;
  double time_ms = 0.0;
  std::optional<double> feasible_len;
  std::optional<double> smoothed_len;
  std::string status;  // "ok" or "no-path"
};

std::string csv_header();

// Floating-point fields carry 6 significant digits.
std::string to_csv(const CsvRow& row);

CsvRow parse_csv_row(const std::string& line);

// Reads rows, skipping the header line if present.
std::vector<CsvRow> read_csv(std::istream& in);

struct PlannerSummary {
  std::string planner;
  std::size_t runs = 0;
  std::size_t ok = 0;
  // Aggregates over rows with status ok.
  double mean_tree_size = 0.0, median_tree_size = 0.0;
  double mean_checks = 0.0, median_checks = 0.0;
  double mean_time_ms = 0.0, median_time_ms = 0.0;
  double mean_feasible = 0.0, median_feasible = 0.0;
  double mean_smoothed = 0.0, median_smoothed = 0.0;
};

struct Summary {
  std::vector<PlannerSummary> planners;  // ordered: nonuniform, uniform
};

/// Per-planner means/medians over ok rows. Aggregation happens on the
/// 6-significant-digit serialized values, so summarizing a written file and
/// summarizing in-memory rows agree exactly. Throws std::invalid_argument on
/// empty input.
Summary summarize(const std::vector<CsvRow>& rows);

// Text table; adds a uniform/nonuniform ratio block when both are present.
std::string format_summary(const Summary& summary);

}  // namespace nurrt
