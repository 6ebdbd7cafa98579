#include "ind4/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ind4/canonical.hpp"

namespace ind4 {

namespace {

// Children of a parent class: append vertex n-1 with every arc-state vector
// against the existing vertices.
template <class Fn>
void for_each_child(const OrientedGraph& parent, Fn&& fn) {
  std::uint32_t n = parent.size() + 1;
  std::vector<std::uint8_t> ext(parent.size(), 0);
  OrientedGraph child(n);
  for (std::uint32_t i = 0; i < parent.size(); ++i)
    for (std::uint32_t j = i + 1; j < parent.size(); ++j)
      child.set_pair(i, j, parent.pair_state(i, j));
  while (true) {
    for (std::uint32_t i = 0; i < parent.size(); ++i) child.set_pair(i, n - 1, ext[i]);
    fn(child);
    std::uint32_t pos = 0;
    while (pos < ext.size() && ext[pos] == 2) ext[pos++] = 0;
    if (pos == ext.size()) break;
    ++ext[pos];
  }
}

std::vector<std::uint64_t> augment_level(const std::vector<std::uint64_t>& parents) {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t pk : parents) {
    OrientedGraph parent = graph_from_key(pk);
    for_each_child(parent, [&](const OrientedGraph& child) { seen.insert(canonical_key(child)); });
  }
  std::vector<std::uint64_t> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::vector<std::uint64_t> enumerate_class_keys(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_classes: n must be in 1..7");
  std::vector<std::uint64_t> keys = {canonical_key(OrientedGraph(1))};
  for (int k = 2; k <= n; ++k) keys = augment_level(keys);
  return keys;
}

std::vector<OrientedGraph> enumerate_classes(int n) {
  auto keys = enumerate_class_keys(n);
  std::vector<OrientedGraph> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) out.push_back(graph_from_key(k));
  return out;
}

void enumerate_classes_stream(int n, const std::function<void(const OrientedGraph&)>& fn) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_classes_stream: n must be in 1..7");
  if (n <= 6) {
    for (std::uint64_t k : enumerate_class_keys(n)) fn(graph_from_key(k));
    return;
  }
  auto parents = enumerate_class_keys(n - 1);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(1u << 22);
  for (std::uint64_t pk : parents) {
    OrientedGraph parent = graph_from_key(pk);
    for_each_child(parent, [&](const OrientedGraph& child) {
      std::uint64_t key = canonical_key(child);
      if (seen.insert(key).second) fn(graph_from_key(key));
    });
  }
}

std::vector<std::uint64_t> enumerate_class_keys_naive(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("naive enumeration: n must be in 1..6");
  std::unordered_set<std::uint64_t> seen;
  std::uint32_t pairs = std::uint32_t(n) * (n - 1) / 2;
  std::vector<std::uint8_t> st(pairs, 0);
  while (true) {
    seen.insert(canonical_key(graph_from_encoding(n, st)));
    std::uint32_t pos = 0;
    while (pos < pairs && st[pos] == 2) st[pos++] = 0;
    if (pos == pairs) break;
    ++st[pos];
  }
  std::vector<std::uint64_t> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace ind4
