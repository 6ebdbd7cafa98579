#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ind4/construction.hpp"
#include "ind4/graph.hpp"

namespace ind4 {

/// One row of the bounds table: the limit construction, its claimed limit
/// value, and the class it targets.
struct BuiltinRow {
  int row = 0;
  std::string label;
  ConstructionSpec spec;
  bool exact = false;          // upper bound meets the construction value
  bool deterministic = false;  // realization uses no randomness
  std::optional<Rat> claimed_rat;
  double claimed = 0.0;
  std::string target;  // graph string of the resolved target class
};

const std::vector<BuiltinRow>& builtin_table();

const BuiltinRow& builtin_row(int row);

// Parameterized spec families (used by the evaluator cross-checks and the
// optimizers; the builtin table instantiates them at the optimal points).
ConstructionSpec spec_row9(const Rat& x);
ConstructionSpec spec_row15(const Rat& x);
ConstructionSpec spec_row18(const Rat& x);
ConstructionSpec spec_row19(const Rat& x);
ConstructionSpec spec_row23(const Rat& x);
ConstructionSpec spec_row28(const Rat& x);
ConstructionSpec spec_row13();  // iterated balanced blow-up of the directed 4-cycle
ConstructionSpec spec_row20(const Rat& x, const Rat& y, const Poly<Rat>& p);
ConstructionSpec spec_row26(const Rat& x, const Rat& y, const Poly<Rat>& p);
ConstructionSpec spec_row22(const Rat& y, const Rat& q, int depth);
ConstructionSpec spec_row7(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// Row 4 family: sizes of X_1..X_5, the geometric ratio for i >= 5, and the
/// inner split X'_2..X'_5 (X'_0 absorbs the remainder); mirrored on the Y side.
struct Row4Params {
  std::array<Rat, 5> x;   // x_1..x_5
  Rat ratio;              // x_{i+1} = ratio * x_i for i >= 5
  std::array<Rat, 4> xp;  // x'_2..x'_5
  int depth = 12;         // keep X_i up to i = depth
};
ConstructionSpec spec_row4(const Row4Params& p);

}  // namespace ind4
