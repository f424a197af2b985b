#pragma once

// Word-level bitset kernels. Every kernel has a portable scalar reference
// implementation and, on x86-64, an AVX2 variant. The variant is chosen once at
// startup from CPUID (override with ATOMKIT_SIMD=scalar|avx2) and both are
// checked against each other in tests/test_simd_kernels.cpp.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace atomkit::simd {

using Word = std::uint64_t;

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  std::size_t (*popcount)(std::span<const Word> words);
  void (*or_assign)(std::span<Word> dst, std::span<const Word> src);
  void (*and_assign)(std::span<Word> dst, std::span<const Word> src);
  void (*andnot_assign)(std::span<Word> dst, std::span<const Word> src);
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  // out[i] = #{ z : candidates[i] & neighborhoods[z] != 0 } for single-word
  // sets. With neighborhoods[z] = z S^-1 this is |X S| for X = candidates[i].
  void (*expansion_counts)(std::span<const Word> candidates, std::span<const Word> neighborhoods,
                           std::span<std::uint32_t> out);
};

const KernelTable& scalar_kernels();
// Null when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

// The table selected for this process.
const KernelTable& active();
// Forces a backend; returns false (and changes nothing) if it is unavailable.
bool select_backend(Backend backend);

std::string_view to_string(Backend backend);

}  // namespace atomkit::simd
