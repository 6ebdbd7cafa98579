#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ind4/graph.hpp"

namespace ind4 {

/// Isomorph-free exhaustive list of oriented graphs on n vertices (1 <= n <= 7),
/// produced by vertex augmentation with canonical-representative dedup.
/// Returned keys are sorted, so class ids are deterministic.
std::vector<std::uint64_t> enumerate_class_keys(int n);

std::vector<OrientedGraph> enumerate_classes(int n);

/// Streaming variant for n = 7: invokes fn once per isomorphism class
/// without materializing the graph list (a key set is still kept for dedup).
void enumerate_classes_stream(int n, const std::function<void(const OrientedGraph&)>& fn);

/// Independent oracle: canonicalize all 3^C(n,2) labeled graphs and dedup.
/// Intended for tests; n <= 5 is fast, n = 6 takes a while.
std::vector<std::uint64_t> enumerate_class_keys_naive(int n);

}  // namespace ind4
