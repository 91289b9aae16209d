#include <bit>
#include <cstdlib>
#include <string_view>

#include "stringob/simd/bitops.hpp"

namespace stringob::simd {

namespace {

void xor_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool dot_scalar(const Word* a, const Word* b, std::size_t words) {
  Word acc = 0;
  for (std::size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

std::size_t first_set_scalar(const Word* a, std::size_t from, std::size_t words) {
  for (std::size_t i = from; i < words; ++i)
    if (a[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(a[i]));
  return npos;
}

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

const BitKernels kScalar{"scalar", xor_into_scalar, dot_scalar, first_set_scalar, popcount_scalar};

const BitKernels* g_forced = nullptr;

const BitKernels& detect() {
  const char* env = std::getenv("STRINGOB_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return kScalar;
  if (const BitKernels* avx2 = avx2_kernels()) return *avx2;
  return kScalar;
}

}  // namespace

const BitKernels& scalar_kernels() { return kScalar; }

const BitKernels& active() {
  if (g_forced != nullptr) return *g_forced;
  static const BitKernels& chosen = detect();
  return chosen;
}

bool select(std::string_view name) {
  if (name == "scalar") {
    g_forced = &kScalar;
    return true;
  }
  if (name == "avx2" && avx2_kernels() != nullptr) {
    g_forced = avx2_kernels();
    return true;
  }
  return false;
}

}  // namespace stringob::simd
