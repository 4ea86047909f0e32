#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "harmony/correlation.hpp"
#include "harmony/datasets.hpp"
#include "harmony/enumeration.hpp"
#include "harmony/errors.hpp"
#include "harmony/measures.hpp"
#include "harmony/periodicity.hpp"
#include "harmony/pitch_spec.hpp"
#include "harmony/rational.hpp"
#include "harmony/reproduction.hpp"
#include "harmony/serialization.hpp"
#include "harmony/signal_oracle.hpp"
#include "harmony/tuning.hpp"

namespace harmony::cli {

namespace {

// Decimal with the leading zero dropped, as in printed correlation tables
// (.982, -.036).
std::string table_decimal(double v, int digits) {
  std::string s = fmt::format("{:.{}f}", v, digits);
  if (s.starts_with("0.")) return s.substr(1);
  if (s.starts_with("-0.")) return "-" + s.substr(2);
  return s;
}

// Correlations to three decimals and p-values to four, as printed; other
// cells to four decimals.
std::string check_value(const Check& c, double v) {
  if (c.name.starts_with("r ")) return table_decimal(v, 3);
  if (c.name.starts_with("p ")) return table_decimal(v, 4);
  return fmt::format("{:.4f}", v);
}

struct TuningOptions {
  std::string name = "just";
  std::optional<double> deviation_percent;

  void attach(CLI::App* cmd, bool required = false) {
    auto* opt = cmd->add_option("--tuning,-t", name, "equal | pythagorean | kirnberger3 | rational | just");
    if (required) {
      opt->required();
    } else {
      opt->capture_default_str();
    }
    cmd->add_option("--deviation-percent", deviation_percent,
                    "Deviation bound d in percent for the rational tuning (default 1)");
  }

  TuningTable resolve() const {
    if (deviation_percent) {
      if (name != "rational") throw UsageError("--deviation-percent applies to --tuning rational only");
      return rational_tuning(*deviation_percent / 100.0);
    }
    return builtin_tuning(name);
  }
};

enum class Format { kText, kCsv, kJson };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw UsageError("unknown format '" + s + "' (valid: text, csv, json)");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void add_extras(AnalysisResult& result, const std::string& spec, const TuningTable& tuning) {
  std::vector<std::string> names = split_list(spec);
  if (spec == "all") names = {"gradus", "omega", "brefeld", "similarity"};
  for (const auto& name : names) {
    const Measure m = parse_measure(name);
    try {
      result.extras[name] = evaluate_measure(m, result.harmony.semitones(), tuning);
    } catch (const UndefinedMeasureError&) {
      // Pairwise measures have no value for a single tone; leave the column empty.
    }
  }
}

int cmd_analyze(const std::string& chord, const TuningOptions& topt, bool no_inversions,
                bool reduce_octave, const std::string& measures, const std::string& format,
                std::ostream& out) {
  const Format fmt_kind = parse_format(format);
  PitchSpec spec = parse_pitch_spec(chord);
  Harmony harmony = reduce_octave ? spec.harmony.reduced_to_octave() : spec.harmony;
  const TuningTable tuning = topt.resolve();
  AnalysisResult result = analyze(harmony, tuning, !no_inversions);
  if (!measures.empty()) add_extras(result, measures, tuning);

  if (fmt_kind == Format::kJson) {
    nlohmann::json j = to_json(result);
    if (spec.lowest_frequency) {
      j["lowest_frequency"] = *spec.lowest_frequency;
      j["fundamental_frequency"] = *spec.lowest_frequency / static_cast<double>(result.raw_h);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (fmt_kind == Format::kCsv) {
    write_analysis_csv(out, std::span<const AnalysisResult>(&result, 1));
    return kExitOk;
  }
  out << "harmony:     " << result.harmony.to_string() << '\n';
  out << "tuning:      " << result.tuning << '\n';
  out << "raw_h:       " << result.raw_h << '\n';
  out << "inversion_h:";
  for (const Fraction& h : result.inversion_h) out << ' ' << fraction_text(h);
  out << '\n';
  out << "mean_h:      " << fmt::format("{:.1f}", result.mean_h) << '\n';
  out << "mean_log_h:  " << fmt::format("{:.3f}", result.mean_log_h) << '\n';
  if (spec.lowest_frequency) {
    out << "f1:          " << fmt::format("{:.2f} Hz", *spec.lowest_frequency) << '\n';
    out << "fundamental: "
        << fmt::format("{:.2f} Hz", *spec.lowest_frequency / static_cast<double>(result.raw_h)) << '\n';
  }
  for (const auto& [name, value] : result.extras) {
    out << fmt::format("{:<13}{}", name + ":", fmt::format("{:.4g}", value)) << '\n';
  }
  return kExitOk;
}

int cmd_rank(const TuningOptions& topt, const std::string& measure, std::optional<int> cardinality,
             std::size_t top, bool no_inversions, const std::string& format, std::ostream& out) {
  const Format fmt_kind = parse_format(format);
  const RankTable table =
      rank_table(topt.resolve(), parse_measure(measure), cardinality, top, !no_inversions);
  if (fmt_kind == Format::kJson) {
    out << to_json(table).dump(2) << '\n';
  } else if (fmt_kind == Format::kCsv) {
    write_rank_csv(out, table);
  } else {
    out << fmt::format("{} / {} / {} ({} evaluated)\n", table.tuning, measure_name(table.measure),
                       cardinality ? fmt::format("{} tones", *cardinality) : "all cardinalities",
                       table.evaluated);
    for (const RankRow& row : table.rows) {
      out << fmt::format("{:>5}  {:<32} {:.3f}\n", row.rank, "{" + row.harmony.to_string() + "}",
                         row.value);
    }
  }
  return kExitOk;
}

int cmd_correlate(const std::string& dataset_id, const std::vector<std::string>& measures_in,
                  const TuningOptions& topt, const std::string& mode, bool no_inversions,
                  const std::string& format, std::ostream& out) {
  const Format fmt_kind = parse_format(format);
  const EmpiricalDataset dataset = load_dataset(dataset_id);
  const TuningTable tuning = topt.resolve();

  std::vector<std::string> measures = measures_in;
  if (measures.empty()) {
    for (Measure m : all_measures()) measures.emplace_back(measure_name(m));
    for (const auto& c : dataset.columns()) {
      if (c.name != "rating") measures.push_back(c.name);
    }
  }
  std::vector<CorrelationMode> modes;
  if (mode == "both") {
    modes = {CorrelationMode::kRanks, CorrelationMode::kValues};
  } else {
    modes = {parse_mode(mode)};
  }

  std::vector<CorrelationReport> reports;
  for (const auto& m : measures) {
    for (CorrelationMode md : modes) {
      reports.push_back(correlate_measure(dataset, m, tuning, md, !no_inversions));
    }
  }
  if (fmt_kind == Format::kJson) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else if (fmt_kind == Format::kCsv) {
    write_correlation_csv(out, reports);
  } else {
    for (const auto& r : reports) {
      out << fmt::format("{:<16} {:<34} {:<12} {:<6} r = {:>5}  n = {:>2}  p = {}\n", r.dataset,
                         r.measure, r.tuning.empty() ? "-" : r.tuning, mode_name(r.mode),
                         table_decimal(r.r, 3), r.n, table_decimal(r.p, 4));
    }
  }
  return kExitOk;
}

int cmd_tuning(const TuningOptions& topt, const std::string& format, std::ostream& out) {
  const Format fmt_kind = parse_format(format);
  const TuningTable tuning = topt.resolve();
  if (fmt_kind == Format::kJson) {
    out << to_json(tuning).dump(2) << '\n';
  } else if (fmt_kind == Format::kCsv) {
    write_tuning_csv(out, tuning);
  } else {
    out << tuning.name();
    if (tuning.deviation_bound()) out << fmt::format(" (d = {}%)", *tuning.deviation_bound() * 100.0);
    out << '\n';
    for (int k = 0; k <= kSemitonesPerOctave; ++k) {
      const std::string ratio = tuning.is_rational() ? tuning.ratio(k).to_string()
                                                     : fmt::format("{:.3f}", tuning.value(k));
      out << fmt::format("{:>3}  {:<15} {:>9}  ({:.2f}%)\n", k, interval_name(k), ratio,
                         deviation_percent(tuning, k));
    }
  }
  return kExitOk;
}

int cmd_approximate(const std::string& value, double precision, int mediant_steps,
                    const std::string& format, std::ostream& out) {
  const Format fmt_kind = parse_format(format);
  double x = 0.0;
  std::optional<Fraction> exact;
  if (value.find('/') != std::string::npos) {
    exact = Fraction::parse(value);
    x = exact->to_double();
  } else {
    try {
      std::size_t used = 0;
      x = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError("malformed number '" + value + "'", value, 0);
    }
  }

  if (mediant_steps > 0) {
    const std::vector<Fraction> seq =
        exact ? mediant_sequence(*exact, mediant_steps) : mediant_sequence(x, mediant_steps);
    if (fmt_kind == Format::kJson) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& f : seq) {
        arr.push_back({{"mediant", f.to_string()},
                       {"deviation_percent", (f.to_double() / x - 1.0) * 100.0}});
      }
      out << nlohmann::json{{"target", x}, {"mediants", arr}}.dump(2) << '\n';
    } else {
      for (const auto& f : seq) {
        out << fmt::format("{:>8}  ({:+.2f}%)\n", f.to_string(), (f.to_double() / x - 1.0) * 100.0);
      }
    }
    return kExitOk;
  }

  const ApproximationTrace trace = approximate(x, precision);
  if (fmt_kind == Format::kJson) {
    out << to_json(trace).dump(2) << '\n';
  } else {
    for (const MediantStep& s : trace.steps) {
      out << fmt::format("  {}/{} | {}/{} -> {}\n", s.left.numerator, s.left.denominator,
                         s.right.numerator, s.right.denominator, s.mediant.to_string());
    }
    out << trace.result.to_string()
        << fmt::format(" ({:+.2f}%)\n", (trace.result.to_double() / x - 1.0) * 100.0);
  }
  return kExitOk;
}

int cmd_oracle(const std::string& chord, const TuningOptions& topt, std::optional<double> f1_opt,
               std::optional<double> horizon, const std::string& format, std::ostream& out) {
  const Format fmt_kind = parse_format(format);
  const PitchSpec spec = parse_pitch_spec(chord);
  const TuningTable tuning = topt.resolve();
  const double f1 = f1_opt.value_or(spec.lowest_frequency.value_or(kConcertA));
  const std::int64_t h = raw_periodicity(spec.harmony, tuning);
  const ToneStack stack = ToneStack::from_harmony(spec.harmony, tuning, f1);
  PeriodSearch search;
  search.horizon_periods = horizon.value_or(static_cast<double>(h) + 1.0);
  const std::optional<double> tau = detect_period(stack, search);
  const double expected = static_cast<double>(h) / f1;
  const bool agree = tau && std::fabs(*tau - expected) <= 1e-6 * expected;

  if (fmt_kind == Format::kJson) {
    nlohmann::json j{{"harmony", spec.harmony.semitones()}, {"tuning", tuning.name()},
                     {"f1", f1},                          {"raw_h", h},
                     {"expected_period", expected},       {"agrees", agree}};
    j["period"] = tau ? nlohmann::json(*tau) : nlohmann::json();
    j["implied_h"] = tau ? nlohmann::json(*tau * f1) : nlohmann::json();
    out << j.dump(2) << '\n';
  } else {
    out << fmt::format("harmony {{{}}} under {} on {:.2f} Hz\n", spec.harmony.to_string(),
                       tuning.name(), f1);
    if (tau) {
      out << fmt::format("period:    {:.9f} s\n", *tau);
      out << fmt::format("implied h: {:.6f}\n", *tau * f1);
    } else {
      out << "period:    not found within horizon\n";
    }
    out << fmt::format("lcm h:     {}\n", h);
    out << "agreement: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const std::string& target, const std::optional<std::string>& tuning,
                  bool verbose, std::ostream& out) {
  if (tuning) builtin_tuning(*tuning);
  std::vector<std::string> targets = {target};
  if (target == "all") targets = reproduction_targets();

  bool all_passed = true;
  for (const auto& t : targets) {
    Reproduction rep = reproduce(t);
    if (tuning) {
      std::erase_if(rep.checks, [&](const Check& c) { return !c.tuning.empty() && c.tuning != *tuning; });
    }
    int failed = 0;
    for (const Check& c : rep.checks) {
      const bool ok = c.within_tolerance();
      if (!ok && !c.informational) ++failed;
      if (verbose || !ok || c.name.starts_with("r ")) {
        const char* status = ok ? "PASS" : (c.informational ? "INFO" : "FAIL");
        out << fmt::format("{} {:<62} printed {:>9}  computed {:>9}  (tol {})\n", status, c.name,
                           check_value(c, c.expected), check_value(c, c.actual), c.tolerance);
      }
    }
    const bool passed = failed == 0;
    all_passed = all_passed && passed;
    out << fmt::format("{}: {} ({} checks, {} failed)\n", t, passed ? "OK" : "MISMATCH",
                       rep.checks.size(), failed);
  }
  return all_passed ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodicity-based consonance analysis of chords and scales"};
  app.require_subcommand(1);

  TuningOptions topt;
  std::string format = "text";
  bool no_inversions = false;

  std::string chord;
  bool reduce_octave = false;
  std::string measures;
  auto* analyze_cmd = app.add_subcommand("analyze", "Relative and logarithmic periodicity of a harmony");
  analyze_cmd->add_option("--chord,-c", chord, "Semitones (\"0,4,7\") or pitch names (\"C4 E4 G4\")")
      ->required();
  topt.attach(analyze_cmd);
  analyze_cmd->add_flag("--no-inversions", no_inversions, "Use the lowest tone as the only reference");
  analyze_cmd->add_flag("--reduce-octave", reduce_octave, "Project all tones into one octave first");
  analyze_cmd->add_option("--measures", measures, "all, or a comma list of gradus,omega,brefeld,similarity");
  analyze_cmd->add_option("--format", format, "text | csv | json")->capture_default_str();

  std::string measure = "log_periodicity";
  std::optional<int> cardinality;
  std::size_t top = 0;
  auto* rank_cmd = app.add_subcommand("rank", "Rank all one-octave harmonies of a cardinality");
  topt.attach(rank_cmd, true);
  rank_cmd->add_option("--measure,-m", measure, "Measure to rank by")->capture_default_str();
  rank_cmd->add_option("--cardinality,-k", cardinality, "Number of tones (1..12); all when omitted");
  rank_cmd->add_option("--top", top, "Keep only the first N rows (0 = all)");
  rank_cmd->add_flag("--no-inversions", no_inversions, "Use the lowest tone as the only reference");
  rank_cmd->add_option("--format", format, "text | csv | json")->capture_default_str();

  std::string dataset;
  std::vector<std::string> corr_measures;
  std::string mode = "ranks";
  auto* corr_cmd = app.add_subcommand("correlate", "Correlate measures with an empirical dataset");
  corr_cmd->add_option("--dataset,-d", dataset, "dyads | triads | complete_triads | church_modes")
      ->required();
  corr_cmd->add_option("--measure,-m", corr_measures, "Measure or static column; repeatable (default: all)");
  topt.attach(corr_cmd);
  corr_cmd->add_option("--mode", mode, "ranks | values | both")->capture_default_str();
  corr_cmd->add_flag("--no-inversions", no_inversions, "Use the lowest tone as the only reference");
  corr_cmd->add_option("--format", format, "text | csv | json")->capture_default_str();

  auto* tuning_cmd = app.add_subcommand("tuning", "Print a tuning table");
  tuning_cmd->add_option("--name,--tuning,-t", topt.name, "Tuning name")->capture_default_str();
  tuning_cmd->add_option("--deviation-percent", topt.deviation_percent,
                         "Deviation bound d in percent for the rational tuning");
  tuning_cmd->add_option("--format", format, "text | csv | json")->capture_default_str();

  std::string value;
  double precision = 0.01;
  int mediant_steps = 0;
  auto* approx_cmd = app.add_subcommand("approximate", "Stern-Brocot approximation of a number");
  approx_cmd->add_option("--value,-x", value, "Positive number, or a fraction a/b")->required();
  approx_cmd->add_option("--precision,-p", precision, "Maximal relative error")->capture_default_str();
  approx_cmd->add_option("--mediants", mediant_steps,
                         "Instead list this many plain mediants between 0/1 and 1/1");
  approx_cmd->add_option("--format", format, "text | json")->capture_default_str();

  std::optional<double> f1;
  std::optional<double> horizon;
  auto* oracle_cmd = app.add_subcommand("oracle", "Check the lcm periodicity against signal autocorrelation");
  oracle_cmd->add_option("--chord,-c", chord, "Semitones or pitch names")->required();
  topt.attach(oracle_cmd);
  oracle_cmd->add_option("--f1", f1, "Lowest-tone frequency in Hz (default from pitch names, else 440)");
  oracle_cmd->add_option("--horizon", horizon, "Search horizon in lowest-tone periods (default h + 1)");
  oracle_cmd->add_option("--format", format, "text | json")->capture_default_str();

  std::string target;
  std::optional<std::string> repro_tuning;
  bool verbose = false;
  auto* repro_cmd = app.add_subcommand("reproduce", "Recompute a published table and diff it");
  repro_cmd->add_option("target", target, "table1 | table2 | table3 | table4 | table6 | cor2 | cor3 | all")
      ->required();
  repro_cmd->add_option("--tuning,-t", repro_tuning, "Only cells computed under this tuning");
  repro_cmd->add_flag("--verbose,-v", verbose, "List every cell, not only correlations and failures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      return cmd_analyze(chord, topt, no_inversions, reduce_octave, measures, format, out);
    }
    if (*rank_cmd) return cmd_rank(topt, measure, cardinality, top, no_inversions, format, out);
    if (*corr_cmd) {
      return cmd_correlate(dataset, corr_measures, topt, mode, no_inversions, format, out);
    }
    if (*tuning_cmd) return cmd_tuning(topt, format, out);
    if (*approx_cmd) return cmd_approximate(value, precision, mediant_steps, format, out);
    if (*oracle_cmd) return cmd_oracle(chord, topt, f1, horizon, format, out);
    if (*repro_cmd) return cmd_reproduce(target, repro_tuning, verbose, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UndefinedMeasureError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace harmony::cli
