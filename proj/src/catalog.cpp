#include "ind4/catalog.hpp"

#include <map>
#include <stdexcept>

#include "ind4/canonical.hpp"
#include "ind4/enumerate.hpp"

namespace ind4 {

Catalog4::Catalog4() {
  auto keys = enumerate_class_keys(4);
  if (keys.size() != 42) throw std::logic_error("catalog: expected 42 classes on 4 vertices");
  std::map<std::uint64_t, int> id_of;
  classes_.reserve(42);
  for (int i = 0; i < 42; ++i) {
    classes_.push_back({graph_from_key(keys[std::size_t(i)]), i});
    id_of[keys[std::size_t(i)]] = i;
  }
  for (int i = 0; i < 42; ++i)
    reversal_[std::size_t(i)] = id_of.at(canonical_key(reverse(classes_[std::size_t(i)].canon)));
  int fixed = 0;
  for (int i = 0; i < 42; ++i) fixed += (reversal_[std::size_t(i)] == i);
  orbits_ = (42 + fixed) / 2;

  std::vector<std::uint8_t> st(6);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    for (int p = 0; p < 6; ++p) {
      st[std::size_t(p)] = std::uint8_t(c % 3);
      c /= 3;
    }
    int id = id_of.at(canonical_key(graph_from_encoding(4, st)));
    lut_[std::size_t(code)] = std::int16_t(id);
    lut32_[std::size_t(code)] = id;
  }
}

const Catalog4& Catalog4::get() {
  static Catalog4 instance;
  return instance;
}

int Catalog4::code_of(const OrientedGraph& g4) {
  if (g4.size() != 4) throw std::invalid_argument("code_of: 4-vertex graph required");
  int code = 0, w = 1;
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = i + 1; j < 4; ++j) {
      code += g4.pair_state(i, j) * w;
      w *= 3;
    }
  return code;
}

int Catalog4::class_of(const OrientedGraph& g4) const { return class_of_code(code_of(g4)); }

int Catalog4::id_of_string(const std::string& graph_string) const {
  return class_of(parse_graph(graph_string));
}

}  // namespace ind4
