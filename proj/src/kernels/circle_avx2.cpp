#include "ind4/kernels.hpp"

#ifdef IND4_HAVE_AVX2_BUILD

#include <immintrin.h>

namespace ind4::kern {

namespace {

inline std::uint32_t pair_state_s(double a, double b, double alpha) {
  double d = b - a;
  if (d < 0.0) d += 1.0;
  if (d < alpha) return 1;
  if (d > 1.0 - alpha) return 2;
  return 0;
}

// 4 lanes of pair_state as epi64 {0,1,2}; identical comparison semantics to
// the scalar reference.
inline __m256i pair_state_v(__m256d va, __m256d vb, __m256d valpha, __m256d v1malpha) {
  __m256d d = _mm256_sub_pd(vb, va);
  __m256d neg = _mm256_cmp_pd(d, _mm256_setzero_pd(), _CMP_LT_OQ);
  d = _mm256_add_pd(d, _mm256_and_pd(neg, _mm256_set1_pd(1.0)));
  __m256d fwd = _mm256_cmp_pd(d, valpha, _CMP_LT_OQ);
  __m256d bwd = _mm256_cmp_pd(d, v1malpha, _CMP_GT_OQ);
  __m256i one = _mm256_and_si256(_mm256_castpd_si256(fwd), _mm256_set1_epi64x(1));
  __m256i two = _mm256_and_si256(_mm256_castpd_si256(bwd), _mm256_set1_epi64x(2));
  return _mm256_or_si256(one, two);
}

}  // namespace

void circle_grid_avx2(double alpha, const double* pos, std::uint32_t r, const std::int32_t* lut,
                      std::uint64_t* counts42) {
  const __m256d valpha = _mm256_set1_pd(alpha);
  const __m256d v1malpha = _mm256_set1_pd(1.0 - alpha);
  const __m256d vzero = _mm256_setzero_pd();
  alignas(32) std::int64_t codes[4];
  for (std::uint32_t a = 0; a < r; ++a) {
    double u1 = pos[a];
    std::uint32_t s01 = pair_state_s(0.0, u1, alpha);
    const __m256d vu1 = _mm256_set1_pd(u1);
    for (std::uint32_t b = 0; b < r; ++b) {
      double u2 = pos[b];
      std::uint32_t s02 = pair_state_s(0.0, u2, alpha);
      std::uint32_t s12 = pair_state_s(u1, u2, alpha);
      std::uint32_t base = s01 + 3u * s02 + 27u * s12;
      const __m256d vu2 = _mm256_set1_pd(u2);
      const __m256i vbase = _mm256_set1_epi64x(std::int64_t(base));
      std::uint32_t c = 0;
      for (; c + 4 <= r; c += 4) {
        __m256d vu3 = _mm256_loadu_pd(pos + c);
        __m256i s03 = pair_state_v(vzero, vu3, valpha, v1malpha);
        __m256i s13 = pair_state_v(vu1, vu3, valpha, v1malpha);
        __m256i s23 = pair_state_v(vu2, vu3, valpha, v1malpha);
        __m256i code = vbase;
        code = _mm256_add_epi64(code, _mm256_mul_epu32(s03, _mm256_set1_epi64x(9)));
        code = _mm256_add_epi64(code, _mm256_mul_epu32(s13, _mm256_set1_epi64x(81)));
        code = _mm256_add_epi64(code, _mm256_mul_epu32(s23, _mm256_set1_epi64x(243)));
        _mm256_store_si256(reinterpret_cast<__m256i*>(codes), code);
        ++counts42[lut[codes[0]]];
        ++counts42[lut[codes[1]]];
        ++counts42[lut[codes[2]]];
        ++counts42[lut[codes[3]]];
      }
      for (; c < r; ++c) {
        double u3 = pos[c];
        std::uint32_t code = base + 9u * pair_state_s(0.0, u3, alpha) +
                             81u * pair_state_s(u1, u3, alpha) +
                             243u * pair_state_s(u2, u3, alpha);
        ++counts42[lut[code]];
      }
    }
  }
}

}  // namespace ind4::kern

#endif
