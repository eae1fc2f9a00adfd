#include "nurrt/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace nurrt {
namespace {

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double sum = 0.0;
  for (const double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::string csv_header() {
  return "planner,seed,cell_size,n_regions,tree_size,iterations,"
         "collision_checks,time_ms,feasible_len,smoothed_len,status";
}

std::string to_csv(const CsvRow& row) {
  std::ostringstream out;
  out << row.planner << ',' << row.seed << ',' << fmt6(row.cell_size) << ','
      << row.n_regions << ',' << row.tree_size << ',' << row.iterations << ','
      << row.collision_checks << ',' << fmt6(row.time_ms) << ',';
  if (row.feasible_len) out << fmt6(*row.feasible_len);
  out << ',';
  if (row.smoothed_len) out << fmt6(*row.smoothed_len);
  out << ',' << row.status;
  return out.str();
}

CsvRow parse_csv_row(const std::string& line) {
  const std::vector<std::string> f = split(line);
  if (f.size() != 11) {
    throw std::invalid_argument("csv row needs 11 fields: " + line);
  }
  CsvRow row;
  row.planner = f[0];
  row.seed = std::stoull(f[1]);
  row.cell_size = std::stod(f[2]);
  row.n_regions = std::stoull(f[3]);
  row.tree_size = std::stoull(f[4]);
  row.iterations = std::stoull(f[5]);
  row.collision_checks = std::stoull(f[6]);
  row.time_ms = std::stod(f[7]);
  if (!f[8].empty()) row.feasible_len = std::stod(f[8]);
  if (!f[9].empty()) row.smoothed_len = std::stod(f[9]);
  row.status = f[10];
  return row;
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == csv_header()) continue;
    rows.push_back(parse_csv_row(line));
  }
  return rows;
}

Summary summarize(const std::vector<CsvRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("no rows to summarize");

  Summary summary;
  for (const std::string planner : {"nonuniform", "uniform"}) {
    std::vector<double> sizes, checks, times, feas, smooth;
    std::size_t runs = 0, ok = 0;
    for (const CsvRow& row : rows) {
      if (row.planner != planner) continue;
      ++runs;
      if (row.status != "ok") continue;
      ++ok;
      sizes.push_back(static_cast<double>(row.tree_size));
      checks.push_back(static_cast<double>(row.collision_checks));
      times.push_back(row.time_ms);
      if (row.feasible_len) feas.push_back(*row.feasible_len);
      if (row.smoothed_len) smooth.push_back(*row.smoothed_len);
    }
    if (runs == 0) continue;
    PlannerSummary s;
    s.planner = planner;
    s.runs = runs;
    s.ok = ok;
    s.mean_tree_size = mean(sizes);
    s.median_tree_size = median(sizes);
    s.mean_checks = mean(checks);
    s.median_checks = median(checks);
    s.mean_time_ms = mean(times);
    s.median_time_ms = median(times);
    s.mean_feasible = mean(feas);
    s.median_feasible = median(feas);
    s.mean_smoothed = mean(smooth);
    s.median_smoothed = median(smooth);
    summary.planners.push_back(std::move(s));
  }
  return summary;
}

std::string format_summary(const Summary& summary) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-11s %5s %5s %12s %14s %12s %12s %12s\n",
                "planner", "runs", "ok", "tree_size", "coll_checks", "time_ms",
                "feasible", "smoothed");
  out << line;
  for (const PlannerSummary& s : summary.planners) {
    std::snprintf(line, sizeof(line),
                  "%-11s %5zu %5zu %12s %14s %12s %12s %12s\n",
                  s.planner.c_str(), s.runs, s.ok,
                  (fmt6(s.mean_tree_size) + "/" + fmt6(s.median_tree_size)).c_str(),
                  (fmt6(s.mean_checks) + "/" + fmt6(s.median_checks)).c_str(),
                  (fmt6(s.mean_time_ms) + "/" + fmt6(s.median_time_ms)).c_str(),
                  (fmt6(s.mean_feasible) + "/" + fmt6(s.median_feasible)).c_str(),
                  (fmt6(s.mean_smoothed) + "/" + fmt6(s.median_smoothed)).c_str());
    out << line;
  }
  out << "(cells are mean/median over ok runs)\n";

  const PlannerSummary* nu = nullptr;
  const PlannerSummary* un = nullptr;
  for (const PlannerSummary& s : summary.planners) {
    if (s.planner == "nonuniform") nu = &s;
    if (s.planner == "uniform") un = &s;
  }
  if (nu && un && nu->ok > 0 && un->ok > 0) {
    out << "uniform/nonuniform ratios (medians): time "
        << fmt6(un->median_time_ms / nu->median_time_ms) << "x, tree size "
        << fmt6(un->median_tree_size / nu->median_tree_size)
        << "x, collision checks "
        << fmt6(nu->median_checks > 0.0
                    ? un->median_checks / nu->median_checks
                    : 0.0)
        << "x\n";
  }
  return out.str();
}

}  // namespace nurrt
