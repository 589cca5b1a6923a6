#include "mber/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace mber {

std::string fixed4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";  // avoid the confusing signed zero
  return s;
}

std::string trimmed4(double value) {
  std::string s = fixed4(value);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s.empty() ? "0" : s;
}

namespace {

void pad_to(std::ostream& out, const std::string& text, std::size_t width) {
  out << text;
  for (std::size_t i = text.size(); i < width; ++i) out << ' ';
}

std::size_t label_width(int n, bool patterns) {
  // "(0,0,1)" is 2n+1 wide; "{1,2,..}" at most 2n+1 too for single digits
  std::size_t w = static_cast<std::size_t>(2 * n + 1);
  if (!patterns && n > 9) w += static_cast<std::size_t>(n - 9);  // two-digit indices
  return std::max<std::size_t>(w, 9);
}

}  // namespace

void print_legend(std::ostream& out, const std::vector<std::string>& columns) {
  if (columns.empty()) return;
  out << "variables:";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << ' ' << (i + 1) << '=' << columns[i];
  out << '\n';
}

void print_probabilities(std::ostream& out, const ProbabilityTable& table) {
  const int n = table.dim();
  const std::size_t w = label_width(n, true);
  out << "probabilities\n";
  pad_to(out, "pattern", w);
  out << "  value\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    pad_to(out, pattern_label(n, static_cast<Mask>(i)), w);
    out << "  " << fixed4(table.at(i)) << '\n';
  }
}

void print_params(std::ostream& out, const DependenceParams& params) {
  const int n = params.dim();
  const std::size_t w = label_width(n, false);
  out << "dependence parameters\n";
  pad_to(out, "subset", w);
  out << "  value\n";
  for (Mask a : subsets_by_report_order(n, 1)) {
    pad_to(out, subset_label(n, a), w);
    out << "  " << fixed4(params.at(a)) << '\n';
  }
}

void print_measures(std::ostream& out, const DependenceMeasures& measures) {
  const int n = measures.dim();
  const std::size_t w = label_width(n, false);
  out << "dependence measures\n";
  pad_to(out, "subset", w);
  out << "  value\n";
  for (const auto& [a, value] : measures.rows()) {
    pad_to(out, subset_label(n, a), w);
    out << "  " << fixed4(value) << '\n';
  }
}

namespace {

void print_rows(std::ostream& out, const std::vector<EstimateRow>& rows, int n, bool patterns) {
  const std::size_t w = label_width(n, patterns);
  pad_to(out, patterns ? "pattern" : "subset", w);
  out << "  lower    median   upper\n";
  for (const auto& row : rows) {
    pad_to(out, patterns ? pattern_label(n, row.id) : subset_label(n, row.id), w);
    out << "  " << fixed4(row.lower) << "   " << fixed4(row.median) << "   " << fixed4(row.upper)
        << '\n';
  }
}

}  // namespace

void print_inference(std::ostream& out, const InferenceReport& report) {
  out << "posterior summaries (" << trimmed4(100.0 * report.probint) << "% intervals, "
      << report.nsim << " draws)\n";
  out << "probabilities\n";
  print_rows(out, report.probabilities, report.n, true);
  out << "dependence parameters\n";
  print_rows(out, report.params, report.n, false);
  out << "dependence measures\n";
  print_rows(out, report.measures, report.n, false);
}

namespace {

void print_rates(std::ostream& out, const std::vector<std::pair<std::uint32_t, double>>& rates,
                 int n, bool patterns) {
  const std::size_t w = label_width(n, patterns);
  pad_to(out, patterns ? "pattern" : "subset", w);
  out << "  coverage\n";
  for (const auto& [id, rate] : rates) {
    pad_to(out, patterns ? pattern_label(n, id) : subset_label(n, id), w);
    out << "  " << fixed4(rate) << '\n';
  }
}

}  // namespace

void print_coverage(std::ostream& out, const CoverageReport& report) {
  out << "interval coverage over " << report.reps << " replications\n";
  out << "probabilities\n";
  print_rates(out, report.probabilities, report.n, true);
  out << "dependence parameters\n";
  print_rates(out, report.params, report.n, false);
  out << "dependence measures\n";
  print_rates(out, report.measures, report.n, false);
}

void print_bounds(std::ostream& out, const FrechetBounds& bounds) {
  out << '[' << trimmed4(bounds.lower) << ", " << trimmed4(bounds.upper) << "]\n";
}

namespace {

using nlohmann::json;

json subset_key(int n, Mask a) { return json(vars_of_mask(n, a)); }

json params_json(const DependenceParams& params) {
  json rows = json::array();
  for (Mask a : subsets_by_report_order(params.dim(), 1))
    rows.push_back({{"subset", subset_key(params.dim(), a)}, {"value", params.at(a)}});
  return rows;
}

json measures_json(const DependenceMeasures& measures) {
  json rows = json::array();
  for (const auto& [a, value] : measures.rows())
    rows.push_back({{"subset", subset_key(measures.dim(), a)}, {"value", value}});
  return rows;
}

json table_json(const ProbabilityTable& table) { return json(table.values()); }

json columns_json(const std::vector<std::string>& columns) { return json(columns); }

}  // namespace

std::string machine_probabilities(const ProbabilityTable& table,
                                  const std::vector<std::string>& columns) {
  json doc{{"n", table.dim()}, {"p", table_json(table)}};
  if (!columns.empty()) doc["columns"] = columns_json(columns);
  return doc.dump();
}

std::string machine_model(const ProbabilityTable& table, const DependenceParams& params,
                          const DependenceMeasures& measures,
                          const std::vector<std::string>& columns) {
  json doc{{"n", table.dim()},
           {"p", table_json(table)},
           {"dependence_params", params_json(params)},
           {"dependence_measures", measures_json(measures)}};
  if (!columns.empty()) doc["columns"] = columns_json(columns);
  return doc.dump();
}

namespace {

json estimate_rows_json(const std::vector<EstimateRow>& rows, int n, bool patterns) {
  json out = json::array();
  for (const auto& row : rows) {
    json entry{{"lower", row.lower}, {"median", row.median}, {"upper", row.upper}};
    if (patterns)
      entry["pattern"] = pattern_of_bits(n, row.id);
    else
      entry["subset"] = subset_key(n, row.id);
    out.push_back(entry);
  }
  return out;
}

}  // namespace

std::string machine_inference(const InferenceReport& report,
                              const std::vector<std::string>& columns) {
  json doc{{"n", report.n},
           {"nsim", report.nsim},
           {"probint", report.probint},
           {"probabilities", estimate_rows_json(report.probabilities, report.n, true)},
           {"dependence_params", estimate_rows_json(report.params, report.n, false)},
           {"dependence_measures", estimate_rows_json(report.measures, report.n, false)}};
  if (!columns.empty()) doc["columns"] = columns_json(columns);
  return doc.dump();
}

namespace {

json rate_rows_json(const std::vector<std::pair<std::uint32_t, double>>& rates, int n,
                    bool patterns) {
  json out = json::array();
  for (const auto& [id, rate] : rates) {
    json entry{{"coverage", rate}};
    if (patterns)
      entry["pattern"] = pattern_of_bits(n, id);
    else
      entry["subset"] = subset_key(n, id);
    out.push_back(entry);
  }
  return out;
}

}  // namespace

std::string machine_coverage(const CoverageReport& report,
                             const std::vector<std::string>& columns) {
  json doc{{"n", report.n},
           {"reps", report.reps},
           {"probabilities", rate_rows_json(report.probabilities, report.n, true)},
           {"dependence_params", rate_rows_json(report.params, report.n, false)},
           {"dependence_measures", rate_rows_json(report.measures, report.n, false)}};
  if (!columns.empty()) doc["columns"] = columns_json(columns);
  return doc.dump();
}

std::string machine_bounds(const FrechetBounds& bounds) {
  return json{{"lower", bounds.lower}, {"upper", bounds.upper}}.dump();
}

}  // namespace mber
