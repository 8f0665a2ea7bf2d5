#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Dense int64 kernels behind the exact linear algebra fast path.
//
// Every variant computes bit-identical results. Callers must keep operands inside
// the documented range (see fits_*); outside it they fall back to arbitrary precision.

namespace mixspec::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

/// c = a * b for row-major n x n matrices.
/// Requires fits_matmul(a, b, n).
using MatMulFn = void (*)(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                          std::span<std::int64_t> c, std::size_t n);

/// dst[j] = keep * dst[j] - scale * src[j] for every j.
/// Requires |keep|, |scale|, |dst[j]|, |src[j]| < 2^31.
using RowCombineFn = void (*)(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                              std::int64_t keep, std::int64_t scale);

struct KernelTable {
  Isa isa;
  MatMulFn matmul;
  RowCombineFn row_combine;
};

inline constexpr std::int64_t kLaneLimit = std::int64_t{1} << 31;

/// |x| < 2^31 for every entry and n * max|a| * max|b| < 2^63.
bool fits_matmul(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::size_t n);
bool fits_lanes(std::span<const std::int64_t> values);

bool supported(Isa isa);
/// Table for a specific ISA; throws std::runtime_error if the CPU lacks it.
const KernelTable& table(Isa isa);
/// Best supported table, chosen once at first use unless overridden by select().
const KernelTable& active();
void select(Isa isa);

namespace detail {
void matmul_scalar(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> c,
                   std::size_t n);
void row_combine_scalar(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t keep,
                        std::int64_t scale);
#if defined(MIXSPEC_HAVE_AVX2)
void matmul_avx2(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> c,
                 std::size_t n);
void row_combine_avx2(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t keep,
                      std::int64_t scale);
#endif
#if defined(MIXSPEC_HAVE_NEON)
void matmul_neon(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> c,
                 std::size_t n);
void row_combine_neon(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t keep,
                      std::int64_t scale);
#endif
}  // namespace detail

}  // namespace mixspec::kernels
