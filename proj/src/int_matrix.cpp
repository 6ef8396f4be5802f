#include "arimat/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "arimat/errors.hpp"

namespace arimat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotWeaklyMultiplicative: return "NotWeaklyMultiplicative";
    case ErrorKind::PathMismatch: return "PathMismatch";
    case ErrorKind::NotSameComponent: return "NotSameComponent";
    case ErrorKind::NotOnFlat: return "NotOnFlat";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_) throw Error(ErrorKind::BadIndex, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, cols[k]);
  }
  return out;
}

IntMatrix IntMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a] >= rows_) throw Error(ErrorKind::BadIndex, "row index out of range");
    for (std::size_t b = 0; b < cols.size(); ++b) {
      if (cols[b] >= cols_) throw Error(ErrorKind::BadIndex, "column index out of range");
      out(a, b) = (*this)(rows[a], cols[b]);
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    mpz_addmul((*this)(dst, j).get_mpz_t(), (*this)(src, j).get_mpz_t(), factor.get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    mpz_addmul((*this)(i, dst).get_mpz_t(), (*this)(i, src).get_mpz_t(), factor.get_mpz_t());
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end(),
                                      [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), v[k].get_mpz_t());
  return out;
}

IntMatrix scale_columns(const IntMatrix& m, std::span<const int> signs) {
  if (signs.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "sign vector length differs from column count");
  IntMatrix out = m;
  for (std::size_t j = 0; j < signs.size(); ++j)
    if (signs[j] < 0) out.negate_col(j);
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).get_str().size());
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string s = m(i, j).get_str();
      if (j) os << ' ';
      os << std::string(width[j] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << to_string(m); }

int sign(const Integer& x) { return sgn(x); }

}  // namespace arimat
