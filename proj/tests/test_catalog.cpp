#include <doctest.h>

#include "ind4/canonical.hpp"
#include "ind4/catalog.hpp"

using namespace ind4;

TEST_CASE("catalog has 42 classes and 30 reversal orbits") {
  const auto& cat = Catalog4::get();
  CHECK(cat.classes().size() == 42);
  CHECK(cat.reversal_orbits() == 30);
  for (int i = 0; i < 42; ++i) {
    CHECK(cat.reversal(cat.reversal(i)) == i);  // involution
    CHECK(cat.classes()[std::size_t(i)].id == i);
    const auto& canon = cat.classes()[std::size_t(i)].canon;
    CHECK(canonical_form(canon) == canon);
  }
}

TEST_CASE("self-paired classes include the directed 4-cycle and the empty graph") {
  const auto& cat = Catalog4::get();
  int cyc = cat.id_of_string("4:12233441");
  int empty = cat.id_of_string("4:");
  CHECK(cat.reversal(cyc) == cyc);
  CHECK(cat.reversal(empty) == empty);
}

TEST_CASE("pattern lut agrees with canonical_form on all 729 codes") {
  const auto& cat = Catalog4::get();
  std::vector<std::uint8_t> st(6);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    for (int p = 0; p < 6; ++p) {
      st[std::size_t(p)] = std::uint8_t(c % 3);
      c /= 3;
    }
    OrientedGraph g = graph_from_encoding(4, st);
    CHECK(Catalog4::code_of(g) == code);
    int expect = -1;
    auto key = canonical_key(g);
    for (int id = 0; id < 42; ++id)
      if (canonical_key(cat.classes()[std::size_t(id)].canon) == key) expect = id;
    CHECK(cat.class_of_code(code) == expect);
  }
}

TEST_CASE("reversal pairing matches reversed canonical forms") {
  const auto& cat = Catalog4::get();
  for (int i = 0; i < 42; ++i) {
    OrientedGraph rev = reverse(cat.classes()[std::size_t(i)].canon);
    CHECK(cat.class_of(rev) == cat.reversal(i));
  }
}
