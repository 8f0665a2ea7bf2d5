#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mixspec/kernels.hpp"

namespace mixspec::kernels {

namespace {

constexpr KernelTable kScalar{Isa::kScalar, detail::matmul_scalar, detail::row_combine_scalar};
#if defined(MIXSPEC_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::kAvx2, detail::matmul_avx2, detail::row_combine_avx2};
#endif
#if defined(MIXSPEC_HAVE_NEON)
constexpr KernelTable kNeon{Isa::kNeon, detail::matmul_neon, detail::row_combine_neon};
#endif

std::int64_t max_abs(std::span<const std::int64_t> values) {
  std::int64_t m = 0;
  for (std::int64_t v : values) {
    if (v == INT64_MIN) return INT64_MAX;
    m = std::max(m, v < 0 ? -v : v);
  }
  return m;
}

const KernelTable* best_table() {
#if defined(MIXSPEC_HAVE_AVX2)
  if (supported(Isa::kAvx2)) return &kAvx2;
#endif
#if defined(MIXSPEC_HAVE_NEON)
  if (supported(Isa::kNeon)) return &kNeon;
#endif
  return &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{best_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool fits_lanes(std::span<const std::int64_t> values) { return max_abs(values) < kLaneLimit; }

bool fits_matmul(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::size_t n) {
  const std::int64_t ma = max_abs(a);
  const std::int64_t mb = max_abs(b);
  if (ma >= kLaneLimit || mb >= kLaneLimit) return false;
  const __int128 bound = static_cast<__int128>(n) * ma * mb;
  return bound < (static_cast<__int128>(1) << 63);
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if defined(MIXSPEC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(MIXSPEC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!supported(isa)) throw std::runtime_error("kernel ISA not supported: " + std::string(isa_name(isa)));
  switch (isa) {
#if defined(MIXSPEC_HAVE_AVX2)
    case Isa::kAvx2: return kAvx2;
#endif
#if defined(MIXSPEC_HAVE_NEON)
    case Isa::kNeon: return kNeon;
#endif
    default: return kScalar;
  }
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) { current().store(&table(isa), std::memory_order_release); }

}  // namespace mixspec::kernels
