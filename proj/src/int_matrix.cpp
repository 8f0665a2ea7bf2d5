#include "mixspec/int_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "mixspec/kernels.hpp"

namespace mixspec {

namespace {

IntMatrix from_dense(std::span<const std::int64_t> m, std::size_t rows, std::size_t cols) {
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i * cols + j];
  return out;
}

IntPoly char_poly_big(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix am(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (a(i, l) != 0) s += a(i, l) * m(l, j);
        }
        am(i, j) = std::move(s);
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    BigInt quot;
    BigInt rem;
    boost::multiprecision::divide_qr(trace, BigInt(k), quot, rem);
    if (rem != 0) throw ArithmeticError("Faddeev-LeVerrier: inexact trace division");
    c[n - k] = -quot;
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return IntPoly(std::move(c));
}

std::optional<IntPoly> char_poly_fast(std::span<const std::int64_t> a, std::size_t n) {
  const auto& kernel = kernels::active();
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::int64_t> m(n * n, 0);
  std::vector<std::int64_t> am(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (!kernels::fits_matmul(a, m, n)) return std::nullopt;
    kernel.matmul(a, m, am, n);
    __int128 trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i * n + i];
    if (trace % static_cast<__int128>(k) != 0) throw ArithmeticError("Faddeev-LeVerrier: inexact trace division");
    const __int128 coeff = -trace / static_cast<__int128>(k);
    if (coeff > INT64_MAX || coeff < INT64_MIN) return std::nullopt;
    c[n - k] = static_cast<std::int64_t>(coeff);
    m.swap(am);
    for (std::size_t i = 0; i < n; ++i) {
      if (__builtin_add_overflow(m[i * n + i], static_cast<std::int64_t>(coeff), &m[i * n + i])) return std::nullopt;
    }
  }
  return IntPoly(std::move(c));
}

struct Elimination {
  int rank = 0;
  bool odd_swaps = false;
  BigInt last_pivot = 1;
};

Elimination bareiss_big(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Elimination out;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      out.odd_swaps = !out.odd_swaps;
    }
    const BigInt pivot = m(r, col);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt scale = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt value = pivot * m(i, j) - scale * m(r, j);
        BigInt quot;
        BigInt rem;
        boost::multiprecision::divide_qr(value, prev, quot, rem);
        if (rem != 0) throw ArithmeticError("Bareiss: inexact division");
        m(i, j) = std::move(quot);
      }
      m(i, col) = 0;
    }
    prev = pivot;
    ++r;
  }
  out.rank = static_cast<int>(r);
  out.last_pivot = prev;
  return out;
}

std::optional<int> bareiss_rank_fast(std::vector<std::int64_t> m, std::size_t rows, std::size_t cols) {
  const auto& kernel = kernels::active();
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p * cols + col] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
    }
    const std::int64_t pivot = m[r * cols + col];
    const std::span<const std::int64_t> pivot_row(m.data() + r * cols + col + 1, cols - col - 1);
    if (!kernels::fits_lanes(std::span<const std::int64_t>(m.data() + r * cols + col, cols - col))) return std::nullopt;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t scale = m[i * cols + col];
      const std::span<std::int64_t> row(m.data() + i * cols + col + 1, cols - col - 1);
      if (scale == 0 && prev == 1 && pivot == 1) continue;
      if (!kernels::fits_lanes(std::span<const std::int64_t>(m.data() + i * cols + col, cols - col))) return std::nullopt;
      kernel.row_combine(row, pivot_row, pivot, scale);
      if (prev != 1) {
        for (auto& x : row) {
          if (x % prev != 0) throw ArithmeticError("Bareiss: inexact division");
          x /= prev;
        }
      }
      m[i * cols + col] = 0;
    }
    prev = pivot;
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix m(n, n);
  for (auto [u, v] : g.edges()) {
    m(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
    m(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
  }
  return m;
}

std::optional<std::vector<std::int64_t>> IntMatrix::to_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(data_.size());
  for (const auto& v : data_) {
    if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntPoly char_poly_dense(std::span<const std::int64_t> m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("char_poly: matrix is not square");
  if (auto fast = char_poly_fast(m, n)) return *std::move(fast);
  return char_poly_big(from_dense(m, n, n));
}

int rank_dense(std::span<const std::int64_t> m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows * cols) throw std::invalid_argument("rank: shape mismatch");
  if (auto fast = bareiss_rank_fast(std::vector<std::int64_t>(m.begin(), m.end()), rows, cols)) return *fast;
  return bareiss_big(from_dense(m, rows, cols)).rank;
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  if (auto dense = m.to_int64()) return char_poly_dense(*dense, m.rows());
  return char_poly_big(m);
}

int rank_exact(const IntMatrix& m) {
  if (auto dense = m.to_int64()) return rank_dense(*dense, m.rows(), m.cols());
  return bareiss_big(m).rank;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  const Elimination e = bareiss_big(m);
  if (e.rank < static_cast<int>(m.rows())) return 0;
  return e.odd_swaps ? BigInt(-e.last_pivot) : e.last_pivot;
}

}  // namespace mixspec
