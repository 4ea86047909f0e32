#pragma once

#include <ostream>
#include <span>

#include <json.hpp>

#include "harmony/correlation.hpp"
#include "harmony/enumeration.hpp"
#include "harmony/periodicity.hpp"
#include "harmony/rational.hpp"
#include "harmony/tuning.hpp"

namespace harmony {

// "a/b", or "a" for integers.
std::string fraction_text(const Fraction& f);

nlohmann::json to_json(const AnalysisResult& result);
nlohmann::json to_json(const ApproximationTrace& trace);
nlohmann::json to_json(const TuningTable& tuning);
nlohmann::json to_json(const RankTable& table);
nlohmann::json to_json(const CorrelationReport& report);

// Header semitones;tuning;raw_h;mean_h;mean_log_h plus one column per extra.
void write_analysis_csv(std::ostream& out, std::span<const AnalysisResult> results);
// Header rank;semitones;cardinality;value
void write_rank_csv(std::ostream& out, const RankTable& table);
// Header dataset;measure;tuning;mode;r;n;p
void write_correlation_csv(std::ostream& out, std::span<const CorrelationReport> reports);

}  // namespace harmony
