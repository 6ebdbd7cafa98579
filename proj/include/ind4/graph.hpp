#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ind4 {

/// Loop-free, 2-cycle-free directed graph on labeled vertices 0..n-1.
/// Stores out- and in-adjacency bitsets; all mutation keeps the
/// antisymmetry invariant (at most one arc per unordered pair).
class OrientedGraph {
 public:
  OrientedGraph() : OrientedGraph(1) {}
  explicit OrientedGraph(std::uint32_t n);

  std::uint32_t size() const { return n_; }

  bool arc(std::uint32_t u, std::uint32_t v) const {
    return (out_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  /// State of the unordered pair {u,v} read in the direction (u,v):
  /// 0 = no arc, 1 = u->v, 2 = v->u. u != v required.
  int pair_state(std::uint32_t u, std::uint32_t v) const {
    if (arc(u, v)) return 1;
    if (arc(v, u)) return 2;
    return 0;
  }

  void add_arc(std::uint32_t u, std::uint32_t v);
  void remove_pair(std::uint32_t u, std::uint32_t v);
  /// Sets the pair {u,v} to the given state read in direction (u,v).
  void set_pair(std::uint32_t u, std::uint32_t v, int state);

  std::uint32_t outdeg(std::uint32_t v) const;
  std::uint32_t indeg(std::uint32_t v) const;
  std::uint32_t nondeg(std::uint32_t v) const { return n_ - 1 - outdeg(v) - indeg(v); }
  std::uint64_t arc_count() const;

  /// Arcs as (tail, head), sorted lexicographically.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs() const;

  /// Pair states in lexicographic pair order (0,1),(0,2),...,(n-2,n-1).
  std::vector<std::uint8_t> encode() const;

  /// Induced subgraph on the given vertices, in the given order.
  OrientedGraph induced(const std::vector<std::uint32_t>& verts) const;

  bool operator==(const OrientedGraph& o) const {
    return n_ == o.n_ && out_ == o.out_;
  }

  const std::uint64_t* out_row(std::uint32_t v) const { return &out_[std::size_t(v) * words_]; }
  std::uint32_t words() const { return words_; }

 private:
  std::uint32_t n_;
  std::uint32_t words_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

OrientedGraph graph_from_encoding(std::uint32_t n, const std::vector<std::uint8_t>& states);

/// Reverses every arc.
OrientedGraph reverse(const OrientedGraph& g);

/// Parses the "n:uvuv..." text format (1-based digit pairs, n <= 9).
OrientedGraph parse_graph(std::string_view s);

/// Inverse of parse_graph; arcs emitted in lexicographic (tail, head) order.
std::string format_graph(const OrientedGraph& g);

/// Binary format: little-endian u32 n, then the pair states packed 2 bits
/// each in lexicographic pair order, LSB-first within each byte.
void write_graph_binary(std::ostream& os, const OrientedGraph& g);
OrientedGraph read_graph_binary(std::istream& is);

}  // namespace ind4
