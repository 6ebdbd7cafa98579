#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ind4/graph.hpp"

namespace ind4 {

struct SearchReport {
  int class_id = -1;
  std::uint32_t n = 0;
  std::uint64_t max_count = 0;
  double max_density = 0.0;
  std::vector<OrientedGraph> witnesses;  // canonical forms, capped
  bool witnesses_capped = false;
  std::string method;
};

/// Exact maximum of N(class, G) over all isomorphism classes on n vertices.
/// n in 4..6; n = 7 only with allow_seven (streams ~2.1M classes).
SearchReport exhaustive_max(int class_id, int n, bool allow_seven = false,
                            std::size_t witness_cap = 64);

/// One enumeration pass recording the maximum count for every class.
std::array<std::uint64_t, 42> exhaustive_max_counts(int n, bool allow_seven = false);

/// Hill climbing with plateau moves: single pair-state changes,
/// clone-symmetrization, and twin-class reorientation; non-strict improvement
/// acceptance with a visited set of canonical forms. budget counts objective
/// evaluations; restarts are seeded deterministically.
SearchReport local_search(int class_id, std::uint32_t n, std::uint64_t seed,
                          std::uint64_t budget);

struct IneqViolation {
  std::string rule;
  OrientedGraph witness;
};

struct IneqReport {
  std::uint64_t graphs_checked = 0;
  std::uint64_t tournaments_checked = 0;
  bool ok = true;
  std::optional<IneqViolation> violation;
};

/// Executable counting bounds: (a) the degree bound
/// 2 N(H25, G) <= sum_v d+ d- d' for every G; (b) the tournament bound
/// 48 N(H29, G) <= n^2 (n-1)(n-2); (c) the tournament triple identity
/// sum_v d+(v) d-(v) = 3 N_cyc3 + N_trans3 = 2 N_cyc3 + C(n,3).
IneqReport check_inequalities_exhaustive(int n);
IneqReport check_inequalities_sampled(std::uint32_t n, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace ind4
