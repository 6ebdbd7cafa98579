#pragma once

#include <cstdint>
#include <vector>

#include "ind4/graph.hpp"
#include "ind4/rational.hpp"

namespace ind4 {

/// Fully labeled graph on vertices 0..s-1 (s = 0 is the empty type).
struct FlagType {
  int s = 0;
  OrientedGraph graph{0};

  bool operator==(const FlagType& o) const { return s == o.s && graph == o.graph; }
};

/// Graph on m >= s vertices whose first s vertices induce exactly the type.
/// Flags are deduplicated up to isomorphisms fixing the labeled part.
struct Flag {
  FlagType type;
  OrientedGraph graph;
};

/// Minimum encoding over the permutations that fix vertices 0..s-1 pointwise.
std::vector<std::uint8_t> label_fixed_canonical(const OrientedGraph& g, int s);

/// All flags of the given type on m vertices, deterministic order. m <= 5.
std::vector<Flag> enumerate_flags(const FlagType& type, int m);

/// Probability that a uniformly random type-inducing injection plus a
/// uniformly random split of the remaining vertices extends to copies of F1
/// and F2. Exact rational; 0 when no injection induces the type.
/// Requires |F1| + |F2| - s = |G|.
Rat pair_density(const Flag& f1, const Flag& f2, const OrientedGraph& g);

/// Marginal of one flag: probability that a random injection plus a random
/// (m-s)-subset of the rest extends to F (used by the partition property
/// tests).
Rat flag_density(const Flag& f, const OrientedGraph& g);

}  // namespace ind4
