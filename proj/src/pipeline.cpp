#include "occm/pipeline.hpp"

#include <exception>

#include "occm/metrics.hpp"

namespace occm {

namespace {

template <typename Fn>
double timed_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

PipelineResult run_pipeline(const LabeledDataset& dataset, const PipelineOptions& options) {
  PipelineResult result;
  BenchmarkRow& row = result.row;
  row.dataset = dataset.name;
  row.alpha = options.mining.alpha.to_string();
  row.k = options.mining.k;
  row.theta = options.theta;
  row.max_pattern_size = options.mining.max_pattern_size;
  row.filtered = options.with_filter;

  try {
    row.alpha_resolved = options.mining.alpha.resolve(dataset.db.size());
    PatternCollection mined;
    row.mine_ms = timed_ms([&] { mined = mine_krfp(dataset.db, options.mining); });
    row.patterns = mined.size();

    if (options.with_filter) {
      FilterResult filtered;
      row.filter_ms = timed_ms([&] { filtered = filter_redundant(mined, dataset.db, options.mining.k); });
      result.candidates = std::move(filtered.patterns);
      row.filtered_patterns = filtered.report.after;
      row.delta_percent = filtered.report.delta_percent;
    } else {
      result.candidates = std::move(mined);
      row.filtered_patterns = row.patterns;
      row.delta_percent = 0.0;
    }

    if (result.candidates.empty()) {
      row.status = to_string(SolveStatus::kInfeasible);
      return result;
    }

    row.solve_ms = timed_ms([&] {
      const IlpInstance inst = build_instance(result.candidates, dataset.db, options.mining.k, options.theta);
      result.solution = solve(inst, options.time_budget);
    });
    row.status = to_string(result.solution.status);
    if (result.solution.status != SolveStatus::kOptimal) return result;
    row.objective = result.solution.objective;

    if (dataset.labels && dataset.labels->classes() == options.theta) {
      result.f1 = f1_score(result.solution, *dataset.labels);
      row.f1 = to_double(*result.f1);
    }

    if (options.explain) {
      row.explain_ms = timed_ms([&] {
        for (auto j : result.solution.selected) {
          const Pattern& p = result.candidates.patterns[j];
          if (p.size() > kShapleyItemCap) continue;
          result.explanations.push_back({dataset.name, explain(p, dataset.db, options.mining.k)});
        }
      });
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
  }
  return result;
}

}  // namespace occm
