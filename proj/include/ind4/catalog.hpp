#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ind4/graph.hpp"

namespace ind4 {

struct GraphClass {
  OrientedGraph canon;
  int id;
};

/// The 42 isomorphism classes of oriented graphs on 4 vertices, their
/// reversal pairing, and the 729-entry pattern lookup table keyed by the
/// base-3 code of the 6 pair states in lexicographic pair order
/// (digit weight 3^pair_index).
class Catalog4 {
 public:
  static const Catalog4& get();

  const std::vector<GraphClass>& classes() const { return classes_; }
  int reversal(int id) const { return reversal_[std::size_t(id)]; }
  int reversal_orbits() const { return orbits_; }

  int class_of_code(int code) const { return lut_[std::size_t(code)]; }
  const std::int32_t* lut32() const { return lut32_.data(); }

  /// Class id of an arbitrary 4-vertex graph.
  int class_of(const OrientedGraph& g4) const;

  /// Base-3 code of a labeled 4-vertex graph.
  static int code_of(const OrientedGraph& g4);

  int id_of_string(const std::string& graph_string) const;

 private:
  Catalog4();
  std::vector<GraphClass> classes_;
  std::array<int, 42> reversal_{};
  int orbits_ = 0;
  std::array<std::int16_t, 729> lut_{};
  std::array<std::int32_t, 729> lut32_{};
};

}  // namespace ind4
