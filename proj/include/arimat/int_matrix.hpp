#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arimat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sorted list of 0-based ground-set (column) indices.
using IndexSet = std::vector<std::size_t>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Indices are 0-based; the 1-based e_1..e_N labelling only appears at the
/// I/O boundary. A matrix may have zero columns, which is how the empty ground
/// set is represented.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> column(std::size_t j) const;

  /// Column submatrix in the order given by `cols`.
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Lexicographic order on (rows, cols, entries); only used for sorting and
  /// set membership.
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v);

/// Right multiplication by the ±1 diagonal matrix with the given signs.
IntMatrix scale_columns(const IntMatrix& m, std::span<const int> signs);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Whitespace-aligned rendering, one row per line.
std::string to_string(const IntMatrix& m);

int sign(const Integer& x);

}  // namespace arimat
