#include "ind4/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace ind4::kern {

namespace {

bool cpu_has_avx2() {
#if defined(IND4_HAVE_AVX2_BUILD) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa> g_isa{cpu_has_avx2() ? Isa::avx2 : Isa::scalar};

}  // namespace

Isa active() { return g_isa.load(std::memory_order_relaxed); }

bool supported(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

void force(Isa isa) {
  if (!supported(isa)) throw std::runtime_error("requested SIMD ISA is not available");
  g_isa.store(isa, std::memory_order_relaxed);
}

void reset() { g_isa.store(cpu_has_avx2() ? Isa::avx2 : Isa::scalar, std::memory_order_relaxed); }

void quad_count(const std::uint8_t* row_i, const std::uint8_t* row_j, const std::uint8_t* row_k,
                std::uint32_t l0, std::uint32_t l1, std::uint32_t base, const std::int32_t* lut,
                std::uint64_t* counts42) {
#ifdef IND4_HAVE_AVX2_BUILD
  if (active() == Isa::avx2) {
    quad_count_avx2(row_i, row_j, row_k, l0, l1, base, lut, counts42);
    return;
  }
#endif
  quad_count_scalar(row_i, row_j, row_k, l0, l1, base, lut, counts42);
}

void circle_grid(double alpha, const double* pos, std::uint32_t r, const std::int32_t* lut,
                 std::uint64_t* counts42) {
#ifdef IND4_HAVE_AVX2_BUILD
  if (active() == Isa::avx2) {
    circle_grid_avx2(alpha, pos, r, lut, counts42);
    return;
  }
#endif
  circle_grid_scalar(alpha, pos, r, lut, counts42);
}

}  // namespace ind4::kern
