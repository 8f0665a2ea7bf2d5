#include <arm_neon.h>

#include "mixspec/kernels.hpp"

namespace mixspec::kernels::detail {

// vmlal_s32 / vmlsl_s32 widen 32-bit lanes to exact 64-bit products; operands are
// below 2^31 in magnitude so the narrowing vmovn_s64 loses nothing.

void matmul_neon(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> c,
                 std::size_t n) {
  const std::size_t vec_end = n - n % 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t* out = c.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) out[j] = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t lhs = a[i * n + k];
      if (lhs == 0) continue;
      const std::int64_t* row = b.data() + k * n;
      const int32x2_t factor = vdup_n_s32(static_cast<std::int32_t>(lhs));
      std::size_t j = 0;
      for (; j < vec_end; j += 2) {
        const int32x2_t rhs = vmovn_s64(vld1q_s64(row + j));
        vst1q_s64(out + j, vmlal_s32(vld1q_s64(out + j), factor, rhs));
      }
      for (; j < n; ++j) out[j] += lhs * row[j];
    }
  }
}

void row_combine_neon(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t keep,
                      std::int64_t scale) {
  const std::size_t len = dst.size();
  const std::size_t vec_end = len - len % 2;
  const int32x2_t k = vdup_n_s32(static_cast<std::int32_t>(keep));
  const int32x2_t s = vdup_n_s32(static_cast<std::int32_t>(scale));
  std::size_t j = 0;
  for (; j < vec_end; j += 2) {
    const int64x2_t kept = vmull_s32(k, vmovn_s64(vld1q_s64(dst.data() + j)));
    vst1q_s64(dst.data() + j, vmlsl_s32(kept, s, vmovn_s64(vld1q_s64(src.data() + j))));
  }
  for (; j < len; ++j) dst[j] = keep * dst[j] - scale * src[j];
}

}  // namespace mixspec::kernels::detail
