// Compiled with -mavx2 -mpopcnt. Only reached after a CPUID check.
#include <immintrin.h>

#include <bit>

#include "atomkit/simd/kernels.hpp"

namespace atomkit::simd {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Nibble-lookup popcount, summed per 64-bit lane with SAD.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

std::size_t popcount_avx2(std::span<const Word> words) {
  const std::size_t n = words.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(words.data() + i)));
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

template <typename Op, typename Tail>
inline void binary_assign(std::span<Word> dst, std::span<const Word> src, Op op, Tail tail) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst.data() + i, op(load(dst.data() + i), load(src.data() + i)));
  for (; i < n; ++i) dst[i] = tail(dst[i], src[i]);
}

void or_avx2(std::span<Word> dst, std::span<const Word> src) {
  binary_assign(
      dst, src, [](__m256i a, __m256i b) { return _mm256_or_si256(a, b); },
      [](Word a, Word b) { return a | b; });
}

void and_avx2(std::span<Word> dst, std::span<const Word> src) {
  binary_assign(
      dst, src, [](__m256i a, __m256i b) { return _mm256_and_si256(a, b); },
      [](Word a, Word b) { return a & b; });
}

void andnot_avx2(std::span<Word> dst, std::span<const Word> src) {
  // _mm256_andnot_si256(x, y) computes ~x & y.
  binary_assign(
      dst, src, [](__m256i a, __m256i b) { return _mm256_andnot_si256(b, a); },
      [](Word a, Word b) { return a & ~b; });
}

bool intersects_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = load(a.data() + i);
    const __m256i y = load(b.data() + i);
    if (!_mm256_testz_si256(x, y)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_subset_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc(y, x) is 1 iff (~y & x) == 0.
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void expansion_counts_avx2(std::span<const Word> candidates, std::span<const Word> neighborhoods,
                           std::span<std::uint32_t> out) {
  const std::size_t n = candidates.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x0 = load(candidates.data() + i);
    const __m256i x1 = load(candidates.data() + i + 4);
    __m256i c0 = zero;
    __m256i c1 = zero;
    for (Word nb : neighborhoods) {
      const __m256i m = _mm256_set1_epi64x(static_cast<long long>(nb));
      // cmpeq yields -1 where the intersection is empty; subtracting the
      // complement adds one per non-empty lane.
      c0 = _mm256_sub_epi64(c0, _mm256_xor_si256(_mm256_cmpeq_epi64(_mm256_and_si256(x0, m), zero),
                                                 _mm256_set1_epi64x(-1)));
      c1 = _mm256_sub_epi64(c1, _mm256_xor_si256(_mm256_cmpeq_epi64(_mm256_and_si256(x1, m), zero),
                                                 _mm256_set1_epi64x(-1)));
    }
    alignas(32) Word lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), c0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), c1);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<std::uint32_t>(lanes[k]);
  }
  for (; i < n; ++i) {
    std::uint32_t count = 0;
    for (Word nb : neighborhoods) count += (candidates[i] & nb) != 0;
    out[i] = count;
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Backend::avx2, popcount_avx2,  or_avx2,        and_avx2,
                                 andnot_avx2,   intersects_avx2, is_subset_avx2, expansion_counts_avx2};
  return &table;
}

}  // namespace atomkit::simd
