#include <bit>

#include "atomkit/simd/kernels.hpp"

namespace atomkit::simd {
namespace {

std::size_t popcount_scalar(std::span<const Word> words) {
  std::size_t total = 0;
  for (Word w : words) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void or_scalar(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_scalar(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_scalar(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

bool intersects_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool is_subset_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void expansion_counts_scalar(std::span<const Word> candidates, std::span<const Word> neighborhoods,
                             std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Word x = candidates[i];
    std::uint32_t count = 0;
    for (Word nb : neighborhoods) count += (x & nb) != 0;
    out[i] = count;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Backend::scalar, popcount_scalar,   or_scalar,
                                 and_scalar,      andnot_scalar,     intersects_scalar,
                                 is_subset_scalar, expansion_counts_scalar};
  return table;
}

}  // namespace atomkit::simd
