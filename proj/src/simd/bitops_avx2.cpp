#include "stringob/simd/bitops.hpp"

#if defined(STRINGOB_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace stringob::simd {

namespace {

void xor_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 8 <= words; i += 8) {
    __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
    __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d0, s0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), _mm256_xor_si256(d1, s1));
  }
  for (; i + 4 <= words; i += 4) {
    __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d0, s0));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

bool dot_avx2(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Word folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < words; ++i) folded ^= a[i] & b[i];
  return std::popcount(folded) & 1;
}

std::size_t first_set_avx2(const Word* a, std::size_t from, std::size_t words) {
  std::size_t i = from;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    if (!_mm256_testz_si256(v, v)) break;
  }
  for (; i < words; ++i)
    if (a[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(a[i]));
  return npos;
}

std::size_t popcount_avx2(const Word* a, std::size_t words) {
  // Nibble lookup popcount (Mula); partial sums collected with SAD.
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                          2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i total = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    total = _mm256_add_epi64(total, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
  std::size_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) sum += static_cast<std::size_t>(std::popcount(a[i]));
  return sum;
}

const BitKernels kAvx2{"avx2", xor_into_avx2, dot_avx2, first_set_avx2, popcount_avx2};

}  // namespace

const BitKernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace stringob::simd

#else

namespace stringob::simd {

const BitKernels* avx2_kernels() { return nullptr; }

}  // namespace stringob::simd

#endif
