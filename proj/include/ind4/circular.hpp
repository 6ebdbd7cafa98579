#pragma once

#include <array>

#include "ind4/rational.hpp"

namespace ind4 {

/// Density of a class among 4 i.i.d. uniform points of the circular graph
/// S^1(alpha). One point is fixed at 0; the innermost coordinate is
/// integrated exactly as an interval measure, the second exactly over its
/// piecewise-affine pieces, and the outer coordinate by per-piece Gauss
/// quadrature on a breakpoint-aware subdivision of at least `resolution`
/// intervals. Deterministic.
double circular_density(int class_id, const Rat& alpha, int resolution = 480);

std::array<double, 42> circular_class_densities(const Rat& alpha, int resolution = 480);

/// Midpoint-grid estimate over the full (u1,u2,u3) cube using the SIMD
/// kernel; a cross-check for the analytic path (first-order accurate only).
std::array<double, 42> circular_profile_grid(const Rat& alpha, int resolution);

}  // namespace ind4
