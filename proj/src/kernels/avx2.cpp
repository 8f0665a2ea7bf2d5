// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "mixspec/kernels.hpp"

namespace mixspec::kernels::detail {

namespace {
// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit lane,
// which is exact because every operand is below 2^31 in magnitude.
inline __m256i load(const std::int64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::int64_t* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }
}  // namespace

void matmul_avx2(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> c,
                 std::size_t n) {
  const std::size_t vec_end = n - n % 4;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t* out = c.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) out[j] = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t lhs = a[i * n + k];
      if (lhs == 0) continue;
      const std::int64_t* row = b.data() + k * n;
      const __m256i factor = _mm256_set1_epi64x(lhs);
      std::size_t j = 0;
      for (; j < vec_end; j += 4) {
        store(out + j, _mm256_add_epi64(load(out + j), _mm256_mul_epi32(factor, load(row + j))));
      }
      for (; j < n; ++j) out[j] += lhs * row[j];
    }
  }
}

void row_combine_avx2(std::span<std::int64_t> dst, std::span<const std::int64_t> src, std::int64_t keep,
                      std::int64_t scale) {
  const std::size_t len = dst.size();
  const std::size_t vec_end = len - len % 4;
  const __m256i k = _mm256_set1_epi64x(keep);
  const __m256i s = _mm256_set1_epi64x(scale);
  std::size_t j = 0;
  for (; j < vec_end; j += 4) {
    const __m256i lhs = _mm256_mul_epi32(k, load(dst.data() + j));
    const __m256i rhs = _mm256_mul_epi32(s, load(src.data() + j));
    store(dst.data() + j, _mm256_sub_epi64(lhs, rhs));
  }
  for (; j < len; ++j) dst[j] = keep * dst[j] - scale * src[j];
}

}  // namespace mixspec::kernels::detail
