#include "ind4/kernels.hpp"

namespace ind4::kern {

void quad_count_scalar(const std::uint8_t* row_i, const std::uint8_t* row_j,
                       const std::uint8_t* row_k, std::uint32_t l0, std::uint32_t l1,
                       std::uint32_t base, const std::int32_t* lut, std::uint64_t* counts42) {
  for (std::uint32_t l = l0; l < l1; ++l) {
    std::uint32_t code = base + 9u * row_i[l] + 81u * row_j[l] + 243u * row_k[l];
    ++counts42[lut[code]];
  }
}

}  // namespace ind4::kern
