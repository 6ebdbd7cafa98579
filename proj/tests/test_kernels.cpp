#include <doctest.h>

#include <random>
#include <vector>

#include "ind4/catalog.hpp"
#include "ind4/kernels.hpp"

using namespace ind4;

TEST_CASE("quad kernel variants agree exactly") {
  const std::int32_t* lut = Catalog4::get().lut32();
  std::mt19937_64 rng(606);
  for (int t = 0; t < 200; ++t) {
    std::uint32_t n = 16 + rng() % 200;
    std::vector<std::uint8_t> ri(n), rj(n), rk(n);
    for (std::uint32_t l = 0; l < n; ++l) {
      ri[l] = std::uint8_t(rng() % 3);
      rj[l] = std::uint8_t(rng() % 3);
      rk[l] = std::uint8_t(rng() % 3);
    }
    std::uint32_t base = (rng() % 3) + 3 * (rng() % 3) + 27 * (rng() % 3);
    std::uint32_t l0 = rng() % (n / 2), l1 = n - rng() % (n / 4);
    std::uint64_t a[42] = {0}, b[42] = {0};
    kern::quad_count_scalar(ri.data(), rj.data(), rk.data(), l0, l1, base, lut, a);
#ifdef IND4_HAVE_AVX2_BUILD
    if (kern::supported(kern::Isa::avx2)) {
      kern::quad_count_avx2(ri.data(), rj.data(), rk.data(), l0, l1, base, lut, b);
      for (int c = 0; c < 42; ++c) CHECK(a[c] == b[c]);
    }
#endif
    std::uint64_t total = 0;
    for (int c = 0; c < 42; ++c) total += a[c];
    CHECK(total == l1 - l0);
  }
}

TEST_CASE("circle kernel variants agree exactly") {
  const std::int32_t* lut = Catalog4::get().lut32();
  std::mt19937_64 rng(707);
  for (double alpha : {0.0, 0.17, 1.0 / 3, 0.444444, 0.5}) {
    std::uint32_t r = 24 + rng() % 16;
    std::vector<double> pos(r);
    for (std::uint32_t i = 0; i < r; ++i) pos[i] = (i + 0.5) / r;
    std::uint64_t a[42] = {0}, b[42] = {0};
    kern::circle_grid_scalar(alpha, pos.data(), r, lut, a);
#ifdef IND4_HAVE_AVX2_BUILD
    if (kern::supported(kern::Isa::avx2)) {
      kern::circle_grid_avx2(alpha, pos.data(), r, lut, b);
      for (int c = 0; c < 42; ++c) CHECK(a[c] == b[c]);
    }
#endif
    std::uint64_t total = 0;
    for (int c = 0; c < 42; ++c) total += a[c];
    CHECK(total == std::uint64_t(r) * r * r);
  }
}

TEST_CASE("dispatch can be forced to scalar") {
  auto prev = kern::active();
  kern::force(kern::Isa::scalar);
  CHECK(kern::active() == kern::Isa::scalar);
  kern::reset();
  CHECK(kern::supported(kern::active()));
  if (kern::supported(kern::Isa::avx2)) { CHECK(kern::active() == kern::Isa::avx2); }
  (void)prev;
}
