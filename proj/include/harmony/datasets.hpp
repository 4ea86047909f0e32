#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace harmony {

struct DatasetItem {
  std::string label;
  // As printed; may contain a duplicate tone (the unison dyad is 0,0).
  std::vector<int> semitones;
  // Empirical consonance rank, 1 = most consonant; ties share the mean rank.
  double empirical = 0.0;
};

// A printed column of a rating table. Missing cells are nullopt.
struct StaticColumn {
  std::string name;
  bool higher_is_consonant = false;
  std::vector<std::optional<double>> values;
};

// One of the embedded rating tables: dyads, triads, complete_triads,
// church_modes.
class EmpiricalDataset {
 public:
  EmpiricalDataset(std::string id, std::vector<DatasetItem> items,
                   std::vector<StaticColumn> columns);

  const std::string& id() const { return id_; }
  const std::vector<DatasetItem>& items() const { return items_; }
  const std::vector<StaticColumn>& columns() const { return columns_; }
  std::size_t size() const { return items_.size(); }

  const StaticColumn* find_column(std::string_view name) const;
  // Ordinal empirical rating column, when the table has one.
  const StaticColumn* rating() const { return find_column("rating"); }

 private:
  std::string id_;
  std::vector<DatasetItem> items_;
  std::vector<StaticColumn> columns_;
};

const std::vector<std::string>& dataset_ids();

// Parses `label;semitones;empirical;<static columns...>` text for a known
// dataset id and checks its shape (item count, column set, semitones start
// at 0). Throws UsageError on any mismatch.
EmpiricalDataset parse_dataset_csv(std::string_view id, std::string_view text);

// Writes the same schema; numbers use the shortest round-trip form, so
// parse -> write reproduces the shipped files byte for byte.
void write_dataset_csv(std::ostream& out, const EmpiricalDataset& dataset);

// Shipped CSV text for a dataset id.
std::string_view embedded_dataset_csv(std::string_view id);

// Loads from $HARMONY_DATA_DIR/<id>.csv when the variable is set, otherwise
// from the embedded copy.
EmpiricalDataset load_dataset(std::string_view id);

}  // namespace harmony
