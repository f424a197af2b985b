#include <atomic>
#include <cstdlib>
#include <string_view>

#include "atomkit/simd/kernels.hpp"

namespace atomkit::simd {

#if !defined(ATOMKIT_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(ATOMKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

namespace {

const KernelTable* initial_table() {
  const char* forced = std::getenv("ATOMKIT_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar_kernels();
  if (cpu_has_avx2() && avx2_kernels() != nullptr) return avx2_kernels();
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select_backend(Backend backend) {
  if (backend == Backend::scalar) {
    current().store(&scalar_kernels(), std::memory_order_release);
    return true;
  }
  if (!cpu_has_avx2() || avx2_kernels() == nullptr) return false;
  current().store(avx2_kernels(), std::memory_order_release);
  return true;
}

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace atomkit::simd
