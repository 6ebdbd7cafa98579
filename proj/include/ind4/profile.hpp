#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ind4/graph.hpp"

namespace ind4 {

/// Induced 4-subgraph counts of a host graph, one slot per Catalog4 class.
struct Profile4 {
  std::array<std::uint64_t, 42> counts{};
  std::uint64_t total = 0;  // C(n,4) in exact mode, sample count otherwise
  std::uint32_t n = 0;
  bool sampled = false;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::array<double, 42> stderr_{};

  double density(int cls) const {
    return total ? double(counts[std::size_t(cls)]) / double(total) : 0.0;
  }
};

/// Reference oracle: iterates all C(n,4) subsets and tests isomorphism by
/// permutation. |V(H)| = 4 required; returns 0 when n < 4.
std::uint64_t count_induced_naive(const OrientedGraph& H, const OrientedGraph& G);

/// Exact profile via the pattern-LUT kernel. Throws when C(n,4) exceeds
/// max_quads (default 10^9). threads = 0 picks the hardware count.
Profile4 profile4_exact(const OrientedGraph& G, int threads = 0,
                        std::uint64_t max_quads = 1000000000ull);

/// Uniform random 4-subsets (fresh subset per sample), seeded.
Profile4 profile4_sampled(const OrientedGraph& G, std::uint64_t samples, std::uint64_t seed);

double density_exact(const OrientedGraph& H, const OrientedGraph& G);

std::string profile_to_csv(const Profile4& p);

}  // namespace ind4
