#pragma once

#include <cstdint>
#include <vector>

#include "ind4/graph.hpp"

namespace ind4 {

inline constexpr std::uint32_t kCanonicalMaxN = 10;

/// Lexicographically least pair-state encoding over all vertex relabelings
/// (branch-and-bound over partial permutations). n <= 10.
std::vector<std::uint8_t> canonical_encoding(const OrientedGraph& g);

OrientedGraph canonical_form(const OrientedGraph& g);

bool is_isomorphic(const OrientedGraph& g, const OrientedGraph& h);

/// Canonical encoding packed into a single word: n in the top 6 bits,
/// pair states 2 bits each (LSB = first pair). Requires n <= 7.
std::uint64_t canonical_key(const OrientedGraph& g);

/// Packs an arbitrary (not necessarily canonical) encoding the same way.
std::uint64_t pack_key(std::uint32_t n, const std::vector<std::uint8_t>& states);

OrientedGraph graph_from_key(std::uint64_t key);

}  // namespace ind4
