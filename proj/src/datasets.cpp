#include "harmony/datasets.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "harmony/errors.hpp"

namespace harmony {

namespace detail {
const std::map<std::string, std::string_view>& embedded_datasets();
}  // namespace detail

namespace {

struct ColumnSpec {
  std::string_view name;
  bool higher_is_consonant;
};

struct DatasetSpec {
  std::string_view id;
  std::size_t items;
  std::vector<ColumnSpec> columns;
};

const std::vector<DatasetSpec>& dataset_specs() {
  static const std::vector<DatasetSpec> kSpecs = {
      {"dyads", 13,
       {{"roughness", false}, {"sonance", true}, {"similarity_printed", true},
        {"periodicity_printed", false}}},
      {"triads", 13,
       {{"rating", false}, {"roughness", false}, {"instability", false},
        {"similarity_printed", true}, {"periodicity_printed", false}, {"dual_process", false}}},
      {"complete_triads", 19,
       {{"rating", false}, {"roughness", false}, {"similarity_printed", true},
        {"periodicity_printed", false}, {"log_periodicity_printed", false},
        {"dual_process", false}}},
      {"church_modes", 7,
       {{"rating", true}, {"sonance", true}, {"similarity_printed", true},
        {"log_periodicity_just_printed", false}, {"log_periodicity_rational_printed", false}}},
  };
  return kSpecs;
}

const DatasetSpec& spec_for(std::string_view id) {
  for (const auto& s : dataset_specs()) {
    if (s.id == id) return s;
  }
  std::string valid;
  for (const auto& s : dataset_specs()) valid += (valid.empty() ? "" : ", ") + std::string(s.id);
  throw UsageError("unknown dataset '" + std::string(id) + "' (valid: " + valid + ")");
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& cell, std::string_view where) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw UsageError(fmt::format("{}: malformed number '{}'", where, cell));
  }
  return v;
}

std::string format_number(double v) { return fmt::format("{}", v); }

}  // namespace

EmpiricalDataset::EmpiricalDataset(std::string id, std::vector<DatasetItem> items,
                                   std::vector<StaticColumn> columns)
    : id_(std::move(id)), items_(std::move(items)), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (c.values.size() != items_.size()) {
      throw UsageError("dataset " + id_ + ": column " + c.name + " has wrong length");
    }
  }
}

const StaticColumn* EmpiricalDataset::find_column(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& dataset_ids() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> out;
    for (const auto& s : dataset_specs()) out.emplace_back(s.id);
    return out;
  }();
  return kIds;
}

EmpiricalDataset parse_dataset_csv(std::string_view id, std::string_view text) {
  const DatasetSpec& spec = spec_for(id);
  std::vector<std::string> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw UsageError(fmt::format("dataset {}: empty file", id));

  const std::vector<std::string> header = split(lines.front(), ';');
  if (header.size() != 3 + spec.columns.size() || header[0] != "label" ||
      header[1] != "semitones" || header[2] != "empirical") {
    throw UsageError(fmt::format("dataset {}: unexpected header '{}'", id, lines.front()));
  }
  std::vector<StaticColumn> columns;
  for (std::size_t c = 0; c < spec.columns.size(); ++c) {
    if (header[3 + c] != spec.columns[c].name) {
      throw UsageError(fmt::format("dataset {}: expected column '{}', found '{}'", id,
                                   spec.columns[c].name, header[3 + c]));
    }
    columns.push_back({std::string(spec.columns[c].name), spec.columns[c].higher_is_consonant, {}});
  }

  std::vector<DatasetItem> items;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::string where = fmt::format("dataset {} line {}", id, row + 1);
    const std::vector<std::string> cells = split(lines[row], ';');
    if (cells.size() != header.size()) throw UsageError(where + ": wrong number of cells");
    DatasetItem item;
    item.label = cells[0];
    for (const std::string& s : split(cells[1], ',')) {
      item.semitones.push_back(static_cast<int>(parse_number(s, where)));
    }
    if (item.semitones.empty() || item.semitones.front() != 0) {
      throw UsageError(where + ": semitones must start at 0");
    }
    item.empirical = parse_number(cells[2], where);
    items.push_back(std::move(item));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string& cell = cells[3 + c];
      columns[c].values.push_back(cell.empty() ? std::nullopt
                                               : std::optional<double>(parse_number(cell, where)));
    }
  }
  if (items.size() != spec.items) {
    throw UsageError(fmt::format("dataset {}: expected {} items, found {}", id, spec.items,
                                 items.size()));
  }
  return EmpiricalDataset(std::string(id), std::move(items), std::move(columns));
}

void write_dataset_csv(std::ostream& out, const EmpiricalDataset& dataset) {
  out << "label;semitones;empirical";
  for (const auto& c : dataset.columns()) out << ';' << c.name;
  out << '\n';
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const DatasetItem& item = dataset.items()[i];
    out << item.label << ';';
    for (std::size_t k = 0; k < item.semitones.size(); ++k) {
      out << (k > 0 ? "," : "") << item.semitones[k];
    }
    out << ';' << format_number(item.empirical);
    for (const auto& c : dataset.columns()) {
      out << ';';
      if (c.values[i]) out << format_number(*c.values[i]);
    }
    out << '\n';
  }
}

std::string_view embedded_dataset_csv(std::string_view id) {
  spec_for(id);
  const auto& data = detail::embedded_datasets();
  const auto it = data.find(std::string(id));
  if (it == data.end()) throw UsageError(fmt::format("dataset {} is not embedded", id));
  return it->second;
}

EmpiricalDataset load_dataset(std::string_view id) {
  spec_for(id);
  if (const char* dir = std::getenv("HARMONY_DATA_DIR"); dir != nullptr && *dir != '\0') {
    const std::filesystem::path path = std::filesystem::path(dir) / (std::string(id) + ".csv");
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open dataset file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dataset_csv(id, buffer.str());
  }
  return parse_dataset_csv(id, embedded_dataset_csv(id));
}

}  // namespace harmony
