#include "harmony/serialization.hpp"

#include <set>

#include <fmt/format.h>

namespace harmony {

namespace {

std::string number(double v) { return fmt::format("{}", v); }

}  // namespace

std::string fraction_text(const Fraction& f) {
  return f.denominator() == 1 ? std::to_string(f.numerator()) : f.to_string();
}

nlohmann::json to_json(const AnalysisResult& result) {
  nlohmann::json inversions = nlohmann::json::array();
  for (const Fraction& h : result.inversion_h) inversions.push_back(fraction_text(h));
  nlohmann::json harmony{{"semitones", result.harmony.semitones()}};
  if (!result.harmony.label().empty()) harmony["label"] = result.harmony.label();
  nlohmann::json out{{"harmony", harmony},
                     {"tuning", result.tuning},
                     {"raw_h", result.raw_h},
                     {"inversion_h", inversions},
                     {"mean_h", result.mean_h},
                     {"mean_log_h", result.mean_log_h}};
  if (!result.extras.empty()) out["extras"] = result.extras;
  return out;
}

nlohmann::json to_json(const ApproximationTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const MediantStep& s : trace.steps) {
    steps.push_back({{"left", fmt::format("{}/{}", s.left.numerator, s.left.denominator)},
                     {"right", fmt::format("{}/{}", s.right.numerator, s.right.denominator)},
                     {"mediant", s.mediant.to_string()}});
  }
  return {{"target", trace.target},
          {"precision", trace.precision},
          {"mediants", steps},
          {"result", trace.result.to_string()},
          {"deviation_percent", (trace.result.to_double() / trace.target - 1.0) * 100.0}};
}

nlohmann::json to_json(const TuningTable& tuning) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k <= kSemitonesPerOctave; ++k) {
    nlohmann::json row{{"semitone", k},
                       {"interval_name", interval_name(k)},
                       {"deviation_percent", deviation_percent(tuning, k)}};
    if (tuning.is_rational()) {
      row["numerator"] = tuning.ratio(k).numerator();
      row["denominator"] = tuning.ratio(k).denominator();
    } else {
      row["value"] = tuning.value(k);
    }
    rows.push_back(row);
  }
  nlohmann::json out{{"name", tuning.name()}, {"ratios", rows}};
  if (tuning.deviation_bound()) out["deviation_bound"] = *tuning.deviation_bound();
  return out;
}

nlohmann::json to_json(const RankTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const RankRow& row : table.rows) {
    rows.push_back({{"rank", row.rank},
                    {"semitones", row.harmony.semitones()},
                    {"cardinality", row.harmony.size()},
                    {"value", row.value}});
  }
  nlohmann::json out{{"tuning", table.tuning},
                     {"measure", measure_name(table.measure)},
                     {"evaluated", table.evaluated},
                     {"rows", rows}};
  out["cardinality"] = table.cardinality ? nlohmann::json(*table.cardinality) : nlohmann::json();
  return out;
}

nlohmann::json to_json(const CorrelationReport& report) {
  return {{"dataset", report.dataset}, {"measure", report.measure}, {"tuning", report.tuning},
          {"mode", mode_name(report.mode)}, {"r", report.r},        {"n", report.n},
          {"p", report.p}};
}

void write_analysis_csv(std::ostream& out, std::span<const AnalysisResult> results) {
  std::set<std::string> extra_names;
  for (const auto& r : results) {
    for (const auto& [name, value] : r.extras) extra_names.insert(name);
  }
  out << "semitones;tuning;raw_h;mean_h;mean_log_h";
  for (const auto& name : extra_names) out << ';' << name;
  out << '\n';
  for (const auto& r : results) {
    out << r.harmony.to_string() << ';' << r.tuning << ';' << r.raw_h << ';' << number(r.mean_h)
        << ';' << number(r.mean_log_h);
    for (const auto& name : extra_names) {
      out << ';';
      if (auto it = r.extras.find(name); it != r.extras.end()) out << number(it->second);
    }
    out << '\n';
  }
}

void write_rank_csv(std::ostream& out, const RankTable& table) {
  out << "rank;semitones;cardinality;value\n";
  for (const RankRow& row : table.rows) {
    out << row.rank << ';' << row.harmony.to_string() << ';' << row.harmony.size() << ';'
        << number(row.value) << '\n';
  }
}

void write_correlation_csv(std::ostream& out, std::span<const CorrelationReport> reports) {
  out << "dataset;measure;tuning;mode;r;n;p\n";
  for (const auto& r : reports) {
    out << r.dataset << ';' << r.measure << ';' << r.tuning << ';' << mode_name(r.mode) << ';'
        << number(r.r) << ';' << r.n << ';' << number(r.p) << '\n';
  }
}

}  // namespace harmony
