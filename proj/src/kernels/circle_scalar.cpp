#include "ind4/kernels.hpp"

namespace ind4::kern {

namespace {

// State of the ordered pair (a, b) on the circle: 1 if a -> b, 2 if b -> a,
// 0 otherwise. d = (b - a) mod 1; an arc a -> b exists iff d in (0, alpha).
inline std::uint32_t pair_state(double a, double b, double alpha) {
  double d = b - a;
  if (d < 0.0) d += 1.0;
  if (d < alpha) return 1;
  if (d > 1.0 - alpha) return 2;
  return 0;
}

}  // namespace

void circle_grid_scalar(double alpha, const double* pos, std::uint32_t r, const std::int32_t* lut,
                        std::uint64_t* counts42) {
  for (std::uint32_t a = 0; a < r; ++a) {
    double u1 = pos[a];
    std::uint32_t s01 = pair_state(0.0, u1, alpha);
    for (std::uint32_t b = 0; b < r; ++b) {
      double u2 = pos[b];
      std::uint32_t s02 = pair_state(0.0, u2, alpha);
      std::uint32_t s12 = pair_state(u1, u2, alpha);
      std::uint32_t base = s01 + 3u * s02 + 27u * s12;
      for (std::uint32_t c = 0; c < r; ++c) {
        double u3 = pos[c];
        std::uint32_t code = base + 9u * pair_state(0.0, u3, alpha) +
                             81u * pair_state(u1, u3, alpha) + 243u * pair_state(u2, u3, alpha);
        ++counts42[lut[code]];
      }
    }
  }
}

}  // namespace ind4::kern
