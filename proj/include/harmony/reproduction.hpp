#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace harmony {

// One recomputed cell compared with its printed value.
struct Check {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  // Tuning the cell depends on; empty when it depends on none.
  std::string tuning;
  // Reported but not counted: the printed value rests on a reading of the
  // measure that our definition does not settle.
  bool informational = false;

  bool within_tolerance() const;
};

struct Reproduction {
  std::string target;
  std::vector<Check> checks;

  // True when every non-informational check is within tolerance.
  bool passed() const;
};

// table1, table2, table3, table4, table6, cor2, cor3.
const std::vector<std::string>& reproduction_targets();

// Recomputes every computable cell of the target. Throws UsageError for an
// unknown target.
Reproduction reproduce(std::string_view target);

}  // namespace harmony
