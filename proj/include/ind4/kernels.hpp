#pragma once

#include <cstdint>

namespace ind4::kern {

/// Classifies the 4-subsets {i,j,k,l} for l in [l0, l1) and accumulates the
/// per-class counts. row_x[l] holds the pair state of (x, l) read as
/// (low index, high index); base carries the l-independent digits
/// s_ij + 3*s_ik + 27*s_jk; lut is the 729-entry class table.
using QuadCountFn = void (*)(const std::uint8_t* row_i, const std::uint8_t* row_j,
                             const std::uint8_t* row_k, std::uint32_t l0, std::uint32_t l1,
                             std::uint32_t base, const std::int32_t* lut,
                             std::uint64_t* counts42);

/// Midpoint-grid profile of the circular graph S^1(alpha): counts, per class,
/// the cells (a,b,c) of an r x r x r grid over [0,1)^3 where the four points
/// (0, u_a, u_b, u_c) induce that class, u_t = (t + 0.5)/r taken from `pos`.
using CircleGridFn = void (*)(double alpha, const double* pos, std::uint32_t r,
                              const std::int32_t* lut, std::uint64_t* counts42);

enum class Isa { scalar, avx2 };

Isa active();
bool supported(Isa isa);
/// Forces the implementation (tests use this); throws if unsupported.
void force(Isa isa);
void reset();

void quad_count(const std::uint8_t* row_i, const std::uint8_t* row_j, const std::uint8_t* row_k,
                std::uint32_t l0, std::uint32_t l1, std::uint32_t base, const std::int32_t* lut,
                std::uint64_t* counts42);

void circle_grid(double alpha, const double* pos, std::uint32_t r, const std::int32_t* lut,
                 std::uint64_t* counts42);

// Reference implementations (exposed for equivalence tests).
void quad_count_scalar(const std::uint8_t*, const std::uint8_t*, const std::uint8_t*,
                       std::uint32_t, std::uint32_t, std::uint32_t, const std::int32_t*,
                       std::uint64_t*);
void circle_grid_scalar(double, const double*, std::uint32_t, const std::int32_t*, std::uint64_t*);

#ifdef IND4_HAVE_AVX2_BUILD
void quad_count_avx2(const std::uint8_t*, const std::uint8_t*, const std::uint8_t*, std::uint32_t,
                     std::uint32_t, std::uint32_t, const std::int32_t*, std::uint64_t*);
void circle_grid_avx2(double, const double*, std::uint32_t, const std::int32_t*, std::uint64_t*);
#endif

}  // namespace ind4::kern
