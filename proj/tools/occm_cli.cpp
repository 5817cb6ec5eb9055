// occm: mine k-relaxed frequent patterns, filter same-cover redundancy,
// select a theta-cluster partition and explain the selected patterns.
//
// Exit codes: 0 success, 1 infeasible or timed out, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "occm/dataset.hpp"
#include "occm/filter.hpp"
#include "occm/metrics.hpp"
#include "occm/miner.hpp"
#include "occm/pipeline.hpp"
#include "occm/report.hpp"
#include "occm/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input;
  std::string labels;
  std::string names;
  std::size_t k = 1;
  std::vector<std::string> alphas{"10%"};
  std::size_t theta = 2;
  std::optional<std::size_t> max_pattern_size;
  double time_budget = 3600.0;
  bool no_filter = false;
  bool require_closed = false;
  std::string format = "csv";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string pattern;
  std::string lp;
};

occm::LabeledDataset load_dataset(const Options& o) {
  if (!o.input.empty()) {
    occm::LabeledDataset ds{std::filesystem::path(o.input).stem().string(),
                            occm::load_transactions(o.input), std::nullopt};
    if (!o.names.empty()) ds.db = ds.db.with_names(occm::load_item_names(o.names));
    if (!o.labels.empty()) ds.labels = occm::load_labels(o.labels, ds.db.size());
    return ds;
  }
  if (o.seed) return occm::planted_dataset(*o.seed, 40, 12, 2, 3, 0.3);
  throw CLI::RequiredError("--input (or --seed for synthetic data)");
}

occm::MiningConfig mining_config(const Options& o, const std::string& alpha) {
  occm::MiningConfig cfg;
  cfg.k = o.k;
  cfg.alpha = occm::SupportThreshold::parse(alpha);
  cfg.max_pattern_size = o.max_pattern_size;
  cfg.require_closed = o.require_closed;
  return cfg;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw std::runtime_error("cannot write " + o.out);
  out << text;
}

std::string render_patterns(const occm::PatternCollection& c, const occm::TransactionDB& db,
                            const std::string& format, const nlohmann::ordered_json* extra) {
  const occm::ItemUniverse* u = &db.universe();
  if (format == "json") {
    nlohmann::ordered_json doc;
    if (extra != nullptr) doc["report"] = *extra;
    doc["k"] = c.provenance.k;
    doc["alpha"] = c.provenance.alpha;
    doc["patterns"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
      doc["patterns"].push_back({{"items", c.patterns[i].to_string(u)},
                                 {"size", c.patterns[i].size()},
                                 {"k_support", c.covers[i].cardinality()}});
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "size,k_support,items\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    os << c.patterns[i].size() << ',' << c.covers[i].cardinality() << ',' << c.patterns[i].to_string(u)
       << '\n';
  return os.str();
}

void log_mining(const occm::PatternCollection& c, const occm::TransactionDB& db,
                const occm::MiningConfig& cfg) {
  std::cerr << "mined " << c.size() << " patterns (k=" << cfg.k << ", alpha=" << cfg.alpha.to_string()
            << " -> " << c.provenance.alpha << " of " << db.size() << ", max size "
            << cfg.max_pattern_size.value_or(db.item_count()) << ")\n";
}

int run_mine(const Options& o) {
  const auto ds = load_dataset(o);
  const auto cfg = mining_config(o, o.alphas.front());
  const auto mined = occm::mine_krfp(ds.db, cfg);
  log_mining(mined, ds.db, cfg);
  emit(o, render_patterns(mined, ds.db, o.format, nullptr));
  return kExitOk;
}

int run_filter(const Options& o) {
  const auto ds = load_dataset(o);
  const auto cfg = mining_config(o, o.alphas.front());
  const auto mined = occm::mine_krfp(ds.db, cfg);
  log_mining(mined, ds.db, cfg);
  const auto result = occm::filter_redundant(mined, ds.db, cfg.k);
  std::cerr << "filtered " << result.report.before << " -> " << result.report.after << " (delta "
            << result.report.delta_percent << "%)\n";
  nlohmann::ordered_json report{{"before", result.report.before},
                                {"after", result.report.after},
                                {"delta_percent", occm::report_value(result.report.delta_percent)},
                                {"empty_input", result.report.empty_input}};
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [size, count] : result.report.class_sizes) hist[std::to_string(size)] = count;
  report["class_sizes"] = hist;
  emit(o, render_patterns(result.patterns, ds.db, o.format, &report));
  return kExitOk;
}

occm::PipelineOptions pipeline_options(const Options& o, const std::string& alpha, bool with_filter,
                                       bool explain) {
  occm::PipelineOptions p;
  p.mining = mining_config(o, alpha);
  p.theta = o.theta;
  p.time_budget = std::chrono::duration<double>(o.time_budget);
  p.with_filter = with_filter;
  p.explain = explain;
  return p;
}

int status_exit(const occm::BenchmarkRow& row) {
  if (row.status == "error") throw std::runtime_error(row.error);
  return row.status == "optimal" ? kExitOk : kExitNoSolution;
}

int run_cluster(const Options& o) {
  const auto ds = load_dataset(o);
  const auto popts = pipeline_options(o, o.alphas.front(), !o.no_filter, false);
  const auto result = occm::run_pipeline(ds, popts);
  const auto& row = result.row;
  if (!o.lp.empty() && !result.candidates.empty()) {
    std::ofstream lp(o.lp);
    occm::write_lp(occm::build_instance(result.candidates, ds.db, popts.mining.k, popts.theta), lp);
  }
  std::cerr << "candidates " << row.patterns << " -> " << row.filtered_patterns << ", status "
            << row.status << "\n";

  const occm::ItemUniverse* u = &ds.db.universe();
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["status"] = row.status;
    doc["objective"] = row.objective ? nlohmann::ordered_json(*row.objective) : nullptr;
    doc["f1"] = row.f1 ? nlohmann::ordered_json(occm::report_value(*row.f1)) : nullptr;
    doc["clusters"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.solution.selected.size(); ++i) {
      const auto& p = result.candidates.patterns[result.solution.selected[i]];
      doc["clusters"].push_back({{"pattern", p.to_string(u)},
                                 {"size", p.size()},
                                 {"transactions", result.solution.clusters[i].indices()}});
    }
    emit(o, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "cluster,pattern,pattern_size,transactions\n";
    for (std::size_t i = 0; i < result.solution.selected.size(); ++i) {
      const auto& p = result.candidates.patterns[result.solution.selected[i]];
      os << i << ',' << p.to_string(u) << ',' << p.size() << ',';
      bool first = true;
      for (auto t : result.solution.clusters[i].indices()) {
        os << (first ? "" : " ") << t;
        first = false;
      }
      os << '\n';
    }
    emit(o, os.str());
  }
  return status_exit(row);
}

std::string render_explanations_csv(const std::vector<occm::ExplanationRecord>& recs,
                                    const occm::ItemUniverse* u) {
  std::ostringstream os;
  os << "pattern,pattern_size,cluster_size,importance,svv,acs\n";
  for (const auto& e : recs)
    os << e.report.pattern.to_string(u) << ',' << e.report.pattern.size() << ','
       << e.report.cluster.cardinality() << ',' << occm::report_value(occm::to_double(e.report.importance))
       << ',' << occm::report_value(occm::to_double(e.report.svv)) << ','
       << occm::report_value(occm::to_double(e.report.acs)) << '\n';
  return os.str();
}

std::vector<occm::ItemId> parse_item_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<occm::ItemId> ids;
  std::string tok;
  while (in >> tok) ids.push_back(std::stoul(tok));
  if (ids.empty()) throw std::invalid_argument("--pattern needs at least one item id");
  return ids;
}

int run_explain(const Options& o) {
  const auto ds = load_dataset(o);
  std::vector<occm::ExplanationRecord> recs;
  int code = kExitOk;
  if (!o.pattern.empty()) {
    const auto p = occm::Pattern::of(ds.db.item_count(), parse_item_list(o.pattern));
    recs.push_back({ds.name, occm::explain(p, ds.db, o.k)});
  } else {
    const auto result = occm::run_pipeline(ds, pipeline_options(o, o.alphas.front(), !o.no_filter, true));
    code = status_exit(result.row);
    recs = result.explanations;
  }
  const occm::ItemUniverse* u = &ds.db.universe();
  emit(o, o.format == "json" ? occm::render_explanations_json(recs, u) : render_explanations_csv(recs, u));
  return code;
}

int run_bench(const Options& o) {
  const auto ds = load_dataset(o);
  std::vector<occm::BenchmarkRow> rows;
  std::vector<occm::ExplanationRecord> recs;
  for (const auto& alpha : o.alphas) {
    for (bool with_filter : {false, true}) {
      if (with_filter && o.no_filter) continue;
      auto result = occm::run_pipeline(ds, pipeline_options(o, alpha, with_filter, with_filter));
      std::cerr << ds.name << " alpha=" << alpha << (with_filter ? " filtered" : " unfiltered") << ": "
                << result.row.patterns << " -> " << result.row.filtered_patterns << ", "
                << result.row.status << "\n";
      rows.push_back(result.row);
      for (auto& e : result.explanations) recs.push_back(std::move(e));
    }
  }
  const auto format = occm::parse_report_format(o.format);
  if (o.out.empty()) {
    const auto points = occm::scatter_points(recs);
    std::cout << (format == occm::ReportFormat::kJson
                      ? occm::render_json(rows, points)
                      : occm::render_rows_csv(rows) + "\n" + occm::render_scatter_csv(points));
  } else {
    for (const auto& p : occm::emit_report(rows, recs, o.out, format)) std::cerr << "wrote " << p << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conceptual clustering with k-relaxed frequent patterns"};
  app.set_config("--config", "", "key=value file supplying any option; command line wins");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--input", o.input, "FIMI transaction file");
  app.add_option("--labels", o.labels, "one class label per transaction");
  app.add_option("--names", o.names, "one item name per line");
  app.add_option("-k", o.k, "relaxation: items a covered transaction may miss")->capture_default_str();
  app.add_option("--alpha", o.alphas, "minimum k-support: count (4), fraction (0.3) or percent (30%)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--theta", o.theta, "number of clusters")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-pattern-size", o.max_pattern_size, "cap on pattern length (default |U|)");
  app.add_option("--time-budget", o.time_budget, "solver budget in seconds")->capture_default_str();
  app.add_flag("--no-filter", o.no_filter, "skip same-cover filtering");
  app.add_flag("--require-closed", o.require_closed, "keep only classically closed patterns");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", o.out, "output path (default stdout)");
  app.add_option("--seed", o.seed, "generate a synthetic labelled dataset when no --input is given");

  auto* mine = app.add_subcommand("mine", "enumerate k-RFPs");
  auto* filter = app.add_subcommand("filter", "enumerate k-RFPs and drop same-cover duplicates");
  auto* cluster = app.add_subcommand("cluster", "select theta patterns partitioning the data");
  cluster->add_option("--lp", o.lp, "also write the model in LP format");
  auto* explain = app.add_subcommand("explain", "Shapley values, SVV and ACS of patterns");
  explain->add_option("--pattern", o.pattern, "explain this pattern (item ids) instead of the clustering");
  auto* bench = app.add_subcommand("bench", "filtered vs unfiltered pipeline report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mine->parsed()) return run_mine(o);
    if (filter->parsed()) return run_filter(o);
    if (cluster->parsed()) return run_cluster(o);
    if (explain->parsed()) return run_explain(o);
    if (bench->parsed()) return run_bench(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
