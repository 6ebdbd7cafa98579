#pragma once

#include <cstdint>

#include "ind4/construction.hpp"
#include "ind4/graph.hpp"

namespace ind4 {

struct RealizeOptions {
  bool strict_regular = false;       // error on even regular-tournament sizes
  bool randomize_arbitrary = false;  // fill arbitrary tournaments randomly
  std::uint32_t iterate_floor = 8;   // budgets below this stop the recursion
};

/// Materializes a finite n-vertex graph of the limit object. Deterministic in
/// (spec, n, seed); seeds only steer the randomized arcs.
OrientedGraph realize(const ConstructionSpec& spec, std::uint32_t n, std::uint64_t seed,
                      const RealizeOptions& opt = {});

/// Largest-remainder apportionment of the part weights to n slots,
/// ties broken by part order.
std::vector<std::uint32_t> apportion(const std::vector<Rat>& weights, std::uint32_t n);

}  // namespace ind4
