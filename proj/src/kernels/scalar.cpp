#include "mixspec/kernels.hpp"

namespace mixspec::kernels::detail {

void matmul_scalar(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> c,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t* out = c.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) out[j] = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t lhs = a[i * n + k];
      if (lhs == 0) continue;
      const std::int64_t* row = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) out[j] += lhs * row[j];
    }
  }
}

void row_combine_scalar(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t keep,
                        std::int64_t scale) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = keep * dst[j] - scale * src[j];
}

}  // namespace mixspec::kernels::detail
