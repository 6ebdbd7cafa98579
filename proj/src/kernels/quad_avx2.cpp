#include "ind4/kernels.hpp"

#ifdef IND4_HAVE_AVX2_BUILD

#include <immintrin.h>

namespace ind4::kern {

void quad_count_avx2(const std::uint8_t* row_i, const std::uint8_t* row_j,
                     const std::uint8_t* row_k, std::uint32_t l0, std::uint32_t l1,
                     std::uint32_t base, const std::int32_t* lut, std::uint64_t* counts42) {
  std::uint32_t l = l0;
  const __m256i vbase = _mm256_set1_epi32(int(base));
  const __m256i c9 = _mm256_set1_epi32(9);
  const __m256i c81 = _mm256_set1_epi32(81);
  const __m256i c243 = _mm256_set1_epi32(243);
  alignas(32) std::int32_t ids[8];
  for (; l + 8 <= l1; l += 8) {
    __m256i si = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(row_i + l)));
    __m256i sj = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(row_j + l)));
    __m256i sk = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(row_k + l)));
    __m256i code = _mm256_add_epi32(vbase, _mm256_mullo_epi32(si, c9));
    code = _mm256_add_epi32(code, _mm256_mullo_epi32(sj, c81));
    code = _mm256_add_epi32(code, _mm256_mullo_epi32(sk, c243));
    __m256i cls = _mm256_i32gather_epi32(lut, code, 4);
    _mm256_store_si256(reinterpret_cast<__m256i*>(ids), cls);
    ++counts42[ids[0]];
    ++counts42[ids[1]];
    ++counts42[ids[2]];
    ++counts42[ids[3]];
    ++counts42[ids[4]];
    ++counts42[ids[5]];
    ++counts42[ids[6]];
    ++counts42[ids[7]];
  }
  if (l < l1) quad_count_scalar(row_i, row_j, row_k, l, l1, base, lut, counts42);
}

}  // namespace ind4::kern

#endif
