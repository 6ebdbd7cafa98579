#include <doctest.h>

#include <random>

#include "ind4/catalog.hpp"
#include "ind4/enumerate.hpp"
#include "ind4/profile.hpp"
#include "ind4/rational.hpp"

using namespace ind4;

namespace {

OrientedGraph random_graph(std::uint32_t n, std::mt19937_64& rng) {
  OrientedGraph g(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.set_pair(i, j, int(rng() % 3));
  return g;
}

OrientedGraph transitive(std::uint32_t n) {
  OrientedGraph g(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_arc(i, j);
  return g;
}

}  // namespace

TEST_CASE("naive counter basics") {
  OrientedGraph c4 = parse_graph("4:12233441");
  CHECK(count_induced_naive(c4, c4) == 1);
  CHECK(count_induced_naive(parse_graph("4:"), OrientedGraph(6)) == 15);
  CHECK(count_induced_naive(transitive(4), transitive(6)) == 15);
  CHECK(count_induced_naive(c4, OrientedGraph(3)) == 0);
}

TEST_CASE("exact profile of structured hosts") {
  const auto& cat = Catalog4::get();
  Profile4 p = profile4_exact(OrientedGraph(10));
  CHECK(p.total == 210);
  CHECK(p.counts[std::size_t(cat.id_of_string("4:"))] == 210);

  // tournaments put all mass on the 4 tournament classes
  Profile4 t = profile4_exact(transitive(9));
  std::uint64_t sum = 0;
  for (int c = 0; c < 42; ++c) {
    if (t.counts[std::size_t(c)]) {
      const auto& g = cat.classes()[std::size_t(c)].canon;
      CHECK(g.arc_count() == 6);
    }
    sum += t.counts[std::size_t(c)];
  }
  CHECK(sum == binom_u64(9, 4));
}

TEST_CASE("two disjoint transitive tournaments hit 100/210") {
  // density of the two-disjoint-arcs class in T5 u T5 is C(5,2)^2 / C(10,4)
  OrientedGraph g(10);
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) {
      g.add_arc(i, j);
      g.add_arc(i + 5, j + 5);
    }
  const auto& cat = Catalog4::get();
  int cls = cat.id_of_string("4:1234");
  Profile4 p = profile4_exact(g);
  CHECK(p.counts[std::size_t(cls)] == 100);
  CHECK(p.total == 210);
}

TEST_CASE("fast path equals the naive oracle") {
  const auto& cat = Catalog4::get();
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    OrientedGraph g = random_graph(4 + rng() % 9, rng);
    Profile4 p = profile4_exact(g);
    std::uint64_t sum = 0;
    for (int c = 0; c < 42; ++c) {
      CHECK(p.counts[std::size_t(c)] ==
            count_induced_naive(cat.classes()[std::size_t(c)].canon, g));
      sum += p.counts[std::size_t(c)];
    }
    CHECK(sum == p.total);
  }
}

TEST_CASE("fast path equals the naive oracle on all 5-vertex classes") {
  const auto& cat = Catalog4::get();
  for (const auto& g : enumerate_classes(5)) {
    Profile4 p = profile4_exact(g);
    for (int c = 0; c < 42; ++c)
      CHECK(p.counts[std::size_t(c)] ==
            count_induced_naive(cat.classes()[std::size_t(c)].canon, g));
  }
}

TEST_CASE("profile of the reversed host is the permuted profile") {
  const auto& cat = Catalog4::get();
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 20; ++t) {
    OrientedGraph g = random_graph(6 + rng() % 6, rng);
    Profile4 p = profile4_exact(g);
    Profile4 q = profile4_exact(reverse(g));
    for (int c = 0; c < 42; ++c)
      CHECK(q.counts[std::size_t(cat.reversal(c))] == p.counts[std::size_t(c)]);
  }
}

TEST_CASE("reversal symmetry of density") {
  std::mt19937_64 rng(31337);
  const auto& cat = Catalog4::get();
  for (int t = 0; t < 50; ++t) {
    OrientedGraph g = random_graph(6 + rng() % 4, rng);
    OrientedGraph h = cat.classes()[rng() % 42].canon;
    CHECK(density_exact(h, g) == doctest::Approx(density_exact(reverse(h), reverse(g))));
  }
}

TEST_CASE("sampled profile sums to the sample count and has sane stderr") {
  std::mt19937_64 rng(8);
  OrientedGraph g = random_graph(30, rng);
  Profile4 s = profile4_sampled(g, 20000, 77);
  std::uint64_t sum = 0;
  for (int c = 0; c < 42; ++c) sum += s.counts[std::size_t(c)];
  CHECK(sum == 20000);
  CHECK(s.sampled);
  Profile4 s2 = profile4_sampled(g, 20000, 77);
  CHECK(s.counts == s2.counts);  // reproducible per seed

  Profile4 exact = profile4_exact(g);
  for (int c = 0; c < 42; ++c) {
    double diff = std::abs(s.density(c) - exact.density(c));
    CHECK(diff <= 6.0 * s.stderr_[std::size_t(c)] + 1e-3);
  }
}

TEST_CASE("exact mode size guard") {
  OrientedGraph g(500);
  CHECK_THROWS(profile4_exact(g, 1, 1000000));
}
