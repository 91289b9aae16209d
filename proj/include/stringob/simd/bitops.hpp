#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level kernels for bit-packed GF(2) rows. Every kernel exists as a
// portable scalar reference and, on x86-64, as an AVX2 variant; the active
// table is chosen once at runtime from CPUID (override with
// STRINGOB_SIMD=scalar).
namespace stringob::simd {

using Word = std::uint64_t;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct BitKernels {
  const char* name;
  /// dst[i] ^= src[i] for i < words.
  void (*xor_into)(Word* dst, const Word* src, std::size_t words);
  /// Parity of popcount(a & b): the GF(2) dot product.
  bool (*dot)(const Word* a, const Word* b, std::size_t words);
  /// Index of the lowest set bit at or after word `from`, or npos.
  std::size_t (*first_set)(const Word* a, std::size_t from, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
};

const BitKernels& scalar_kernels();

/// Null when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const BitKernels* avx2_kernels();

/// The kernel table in use.
const BitKernels& active();

/// Forces a table by name ("scalar" or "avx2"); returns false if unavailable.
bool select(std::string_view name);

}  // namespace stringob::simd
