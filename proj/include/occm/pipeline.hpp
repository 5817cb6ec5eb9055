#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "occm/dataset.hpp"
#include "occm/explain.hpp"
#include "occm/filter.hpp"
#include "occm/miner.hpp"
#include "occm/solver.hpp"

namespace occm {

/// Stage outcome recorded in a benchmark row: a solver status, or "error".
struct BenchmarkRow {
  std::string dataset;
  std::string alpha;           // as given, e.g. "30%" or "4"
  std::size_t alpha_resolved = 0;
  std::size_t k = 0;
  std::size_t theta = 0;
  std::optional<std::size_t> max_pattern_size;
  bool filtered = false;
  std::size_t patterns = 0;           // |A|
  std::size_t filtered_patterns = 0;  // |A_f|, equal to |A| when not filtered
  double delta_percent = 0.0;
  std::string status;
  std::optional<std::int64_t> objective;
  std::optional<double> f1;
  double mine_ms = 0.0;
  double filter_ms = 0.0;
  double solve_ms = 0.0;
  double explain_ms = 0.0;
  std::string error;
};

struct ExplanationRecord {
  std::string dataset;
  ExplanationReport report;
};

struct PipelineResult {
  BenchmarkRow row;
  PatternCollection candidates;  // what the solver saw
  ClusteringSolution solution;
  std::optional<Rational> f1;
  std::vector<ExplanationRecord> explanations;
};

struct PipelineOptions {
  MiningConfig mining;
  std::size_t theta = 2;
  std::chrono::duration<double> time_budget = std::chrono::hours(1);
  bool with_filter = true;
  bool explain = true;
};

/// mine -> filter (optional) -> build instance -> solve -> F1 (when labels
/// exist and the solve is optimal) -> explain each selected pattern.
/// Stage errors are caught and reported in the row.
PipelineResult run_pipeline(const LabeledDataset& dataset, const PipelineOptions& options);

}  // namespace occm
