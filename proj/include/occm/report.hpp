#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "occm/pipeline.hpp"

namespace occm {

enum class ReportFormat { kCsv, kJson };
ReportFormat parse_report_format(const std::string& text);

struct ScatterPoint {
  std::string dataset;
  std::size_t pattern_size = 0;
  double svv = 0.0;
  double acs = 0.0;
};

std::vector<ScatterPoint> scatter_points(const std::vector<ExplanationRecord>& explanations);

/// Reported numbers are rounded to 10 significant digits so that the CSV and
/// JSON renderings parse back to identical doubles.
double report_value(double x);

std::string render_rows_csv(const std::vector<BenchmarkRow>& rows);
std::string render_scatter_csv(const std::vector<ScatterPoint>& points);
std::string render_json(const std::vector<BenchmarkRow>& rows, const std::vector<ScatterPoint>& points);

/// Per-pattern detail (importance, Shapley values, SVV, ACS) as JSON.
std::string render_explanations_json(const std::vector<ExplanationRecord>& explanations,
                                     const ItemUniverse* universe = nullptr);

/// CSV writes `out` (rows) and `<out stem>.scatter.csv` next to it; JSON
/// writes a single document to `out`. Returns the paths written.
std::vector<std::filesystem::path> emit_report(const std::vector<BenchmarkRow>& rows,
                                               const std::vector<ExplanationRecord>& explanations,
                                               const std::filesystem::path& out, ReportFormat format);

}  // namespace occm
