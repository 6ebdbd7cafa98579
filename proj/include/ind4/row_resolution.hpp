#pragma once

#include <string>
#include <vector>

#include "ind4/rational.hpp"

namespace ind4 {

/// Computational mapping of a bounds-table row to its catalog class: the
/// row's construction is evaluated for all 42 classes and matched against the
/// claimed value; prose-level structural facts break the numeric ties.
struct RowResolution {
  int row = 0;
  std::vector<int> candidates;  // classes within 1e-3 of the claimed value
  int chosen = -1;              // unique class after structural filters
  double construction_value = 0.0;
  double claimed = 0.0;
  bool exact_match = false;  // rational equality against a rational claim
  bool ambiguous = false;
  std::string method;
};

std::vector<RowResolution> resolve_rows();

std::string row_resolution_csv(const std::vector<RowResolution>& rows);

}  // namespace ind4
