#include "occm/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace occm {

ReportFormat parse_report_format(const std::string& text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown report format '" + text + "' (expected csv or json)");
}

std::vector<ScatterPoint> scatter_points(const std::vector<ExplanationRecord>& explanations) {
  std::vector<ScatterPoint> out;
  out.reserve(explanations.size());
  for (const auto& e : explanations)
    out.push_back({e.dataset, e.report.pattern.size(), to_double(e.report.svv), to_double(e.report.acs)});
  return out;
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>)
    return fmt(*v);
  else
    return std::to_string(*v);
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>)
    return report_value(*v);
  else
    return *v;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("error writing " + path.string());
}

const char* kRowHeader =
    "dataset,alpha,alpha_resolved,k,theta,max_pattern_size,filtered,patterns,filtered_patterns,"
    "delta_percent,status,objective,f1,mine_ms,filter_ms,solve_ms,explain_ms,error\n";

}  // namespace

double report_value(double x) { return std::stod(fmt(x)); }

std::string render_rows_csv(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream os;
  os << kRowHeader;
  for (const auto& r : rows) {
    os << csv_field(r.dataset) << ',' << csv_field(r.alpha) << ',' << r.alpha_resolved << ',' << r.k
       << ',' << r.theta << ',' << opt(r.max_pattern_size) << ',' << (r.filtered ? "true" : "false")
       << ',' << r.patterns << ',' << r.filtered_patterns << ',' << fmt(r.delta_percent) << ','
       << csv_field(r.status) << ',' << opt(r.objective) << ',' << opt(r.f1) << ',' << fmt(r.mine_ms)
       << ',' << fmt(r.filter_ms) << ',' << fmt(r.solve_ms) << ',' << fmt(r.explain_ms) << ','
       << csv_field(r.error) << '\n';
  }
  return os.str();
}

std::string render_scatter_csv(const std::vector<ScatterPoint>& points) {
  std::ostringstream os;
  os << "dataset,pattern_size,svv,acs\n";
  for (const auto& p : points)
    os << csv_field(p.dataset) << ',' << p.pattern_size << ',' << fmt(p.svv) << ',' << fmt(p.acs) << '\n';
  return os.str();
}

std::string render_json(const std::vector<BenchmarkRow>& rows, const std::vector<ScatterPoint>& points) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["dataset"] = r.dataset;
    j["alpha"] = r.alpha;
    j["alpha_resolved"] = r.alpha_resolved;
    j["k"] = r.k;
    j["theta"] = r.theta;
    j["max_pattern_size"] = opt_json(r.max_pattern_size);
    j["filtered"] = r.filtered;
    j["patterns"] = r.patterns;
    j["filtered_patterns"] = r.filtered_patterns;
    j["delta_percent"] = report_value(r.delta_percent);
    j["status"] = r.status;
    j["objective"] = opt_json(r.objective);
    j["f1"] = opt_json(r.f1);
    j["mine_ms"] = report_value(r.mine_ms);
    j["filter_ms"] = report_value(r.filter_ms);
    j["solve_ms"] = report_value(r.solve_ms);
    j["explain_ms"] = report_value(r.explain_ms);
    j["error"] = r.error;
    doc["rows"].push_back(std::move(j));
  }
  doc["scatter"] = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json j;
    j["dataset"] = p.dataset;
    j["pattern_size"] = p.pattern_size;
    j["svv"] = report_value(p.svv);
    j["acs"] = report_value(p.acs);
    doc["scatter"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string render_explanations_json(const std::vector<ExplanationRecord>& explanations,
                                     const ItemUniverse* universe) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : explanations) {
    const auto& r = e.report;
    nlohmann::ordered_json j;
    j["dataset"] = e.dataset;
    j["pattern"] = r.pattern.to_string(universe);
    j["pattern_size"] = r.pattern.size();
    j["cluster_size"] = r.cluster.cardinality();
    j["importance"] = report_value(to_double(r.importance));
    j["importance_exact"] = r.importance.str();
    nlohmann::ordered_json phi = nlohmann::ordered_json::object();
    for (const auto& [item, value] : r.shapley) {
      const std::string key = universe != nullptr ? universe->name(item) : std::to_string(item);
      phi[key] = report_value(to_double(value));
    }
    j["shapley"] = std::move(phi);
    j["svv"] = report_value(to_double(r.svv));
    j["svv_exact"] = r.svv.str();
    j["acs"] = report_value(to_double(r.acs));
    j["acs_exact"] = r.acs.str();
    j["degenerate_jaccard"] = r.degenerate_jaccard;
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit_report(const std::vector<BenchmarkRow>& rows,
                                               const std::vector<ExplanationRecord>& explanations,
                                               const std::filesystem::path& out, ReportFormat format) {
  if (rows.empty()) throw std::invalid_argument("no benchmark rows to report");
  const auto points = scatter_points(explanations);
  if (format == ReportFormat::kJson) {
    write_file(out, render_json(rows, points));
    return {out};
  }
  std::filesystem::path scatter = out;
  scatter.replace_filename(out.stem().string() + ".scatter.csv");
  write_file(out, render_rows_csv(rows));
  write_file(scatter, render_scatter_csv(points));
  return {out, scatter};
}

}  // namespace occm
