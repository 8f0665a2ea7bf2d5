#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mixspec/graph.hpp"
#include "mixspec/int_poly.hpp"

namespace mixspec {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix adjacency(const Graph& g);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Entries as int64 when every one fits.
  std::optional<std::vector<std::int64_t>> to_int64() const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence. Throws std::invalid_argument if M is not square.
IntPoly char_poly(const IntMatrix& m);
/// Rank over the rationals by Bareiss fraction-free elimination.
int rank_exact(const IntMatrix& m);
BigInt determinant(const IntMatrix& m);

// int64 entry points; they use the dispatched SIMD kernels while entries stay in lane range
// and redo the computation in arbitrary precision otherwise.
IntPoly char_poly_dense(std::span<const std::int64_t> m, std::size_t n);
int rank_dense(std::span<const std::int64_t> m, std::size_t rows, std::size_t cols);

}  // namespace mixspec
