#include <doctest.h>

#include <random>
#include <sstream>

#include "ind4/canonical.hpp"
#include "ind4/graph.hpp"

using namespace ind4;

namespace {

OrientedGraph random_graph(std::uint32_t n, std::mt19937_64& rng) {
  OrientedGraph g(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.set_pair(i, j, int(rng() % 3));
  return g;
}

OrientedGraph relabel(const OrientedGraph& g, const std::vector<std::uint32_t>& perm) {
  OrientedGraph h(g.size());
  for (auto [u, v] : g.arcs()) h.add_arc(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("parse_graph reads the appendix example") {
  OrientedGraph g = parse_graph("4:12233414");
  CHECK(g.size() == 4);
  CHECK(g.arc_count() == 4);
  CHECK(g.arc(0, 1));
  CHECK(g.arc(1, 2));
  CHECK(g.arc(2, 3));
  CHECK(g.arc(0, 3));
}

TEST_CASE("parse_graph handles the empty and small cases") {
  OrientedGraph e = parse_graph("4:");
  CHECK(e.size() == 4);
  CHECK(e.arc_count() == 0);

  OrientedGraph s = parse_graph("3:1213");
  CHECK(s.arc(0, 1));
  CHECK(s.arc(0, 2));
  CHECK(s.arc_count() == 2);
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS(parse_graph("12"));          // no colon
  CHECK_THROWS(parse_graph("3:123"));       // odd digits
  CHECK_THROWS(parse_graph("3:14"));        // out of range
  CHECK_THROWS(parse_graph("3:11"));        // loop
  CHECK_THROWS(parse_graph("3:1221"));      // 2-cycle
  CHECK_THROWS(parse_graph("3:1212"));      // duplicate
  // n = 0 is reserved for the empty flag type
  CHECK(parse_graph("0:").size() == 0);
  CHECK_THROWS(parse_graph("0:11"));
}

TEST_CASE("format_graph emits lexicographic arc order") {
  CHECK(format_graph(parse_graph("4:")) == "4:");
  CHECK(format_graph(parse_graph("4:12233414")) == "4:12142334");
}

TEST_CASE("parse/format round-trip on random graphs") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 100; ++t) {
    OrientedGraph g = random_graph(4 + rng() % 6, rng);
    OrientedGraph h = parse_graph(format_graph(g));
    CHECK(g == h);
  }
}

TEST_CASE("binary round-trip") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    OrientedGraph g = random_graph(2 + rng() % 40, rng);
    std::stringstream ss;
    write_graph_binary(ss, g);
    OrientedGraph h = read_graph_binary(ss);
    CHECK(g == h);
  }
}

TEST_CASE("reverse is an involution and flips arcs") {
  OrientedGraph s = parse_graph("3:1213");
  OrientedGraph r = reverse(s);
  CHECK(r.arc(1, 0));
  CHECK(r.arc(2, 0));
  CHECK(r.arc_count() == 2);
  CHECK(reverse(r) == s);
  OrientedGraph e = parse_graph("4:");
  CHECK(reverse(e) == e);
}

TEST_CASE("degree partition sums") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    OrientedGraph g = random_graph(3 + rng() % 10, rng);
    std::uint64_t dplus = 0, dminus = 0;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      dplus += g.outdeg(v);
      dminus += g.indeg(v);
      CHECK(g.outdeg(v) + g.indeg(v) + g.nondeg(v) == g.size() - 1);
    }
    CHECK(dplus == g.arc_count());
    CHECK(dminus == g.arc_count());
  }
}

TEST_CASE("canonical form is relabeling-invariant and idempotent") {
  std::mt19937_64 rng(4242);
  OrientedGraph base = parse_graph("4:12233414");
  auto ckey = canonical_key(base);
  std::vector<std::uint32_t> perm = {0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    CHECK(canonical_key(relabel(base, perm)) == ckey);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int t = 0; t < 100; ++t) {
    OrientedGraph g = random_graph(2 + rng() % 6, rng);
    OrientedGraph c = canonical_form(g);
    CHECK(canonical_form(c) == c);
    CHECK(is_isomorphic(c, g));
  }
}

TEST_CASE("is_isomorphic distinguishes out-star from in-star") {
  CHECK(is_isomorphic(parse_graph("4:1223"), parse_graph("4:2334")));
  CHECK_FALSE(is_isomorphic(parse_graph("3:1213"), parse_graph("3:2131")));
  // directed 4-cycle is isomorphic to its reverse
  OrientedGraph c4 = parse_graph("4:12233441");
  CHECK(is_isomorphic(c4, reverse(c4)));
  // transitive tournament reverses to itself
  OrientedGraph t4 = parse_graph("4:121314232434");
  CHECK(is_isomorphic(t4, reverse(t4)));
}

TEST_CASE("reverse preserves isomorphism") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    OrientedGraph g = random_graph(5, rng);
    std::vector<std::uint32_t> perm = {0, 1, 2, 3, 4};
    for (std::uint32_t i = 4; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    OrientedGraph h = relabel(g, perm);
    REQUIRE(is_isomorphic(g, h));
    CHECK(is_isomorphic(reverse(g), reverse(h)));
  }
}
