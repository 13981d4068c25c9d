#include "kronmod/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace kronmod {

namespace {

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  bool odd_swaps = false;
};

// Reduced row echelon form.
Echelon eliminate(Matrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(row, c));
      out.odd_swaps = !out.odd_swaps;
    }
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(const Field& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t ncols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(field, rows.size(), ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (long long v : row) m(r, c++) = field.from_int(v);
    ++r;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m = *this;
  Scalar det = field_.one();
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return field_.zero();
    if (pivot != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::size_t Matrix::rank() const { return eliminate(*this).pivot_cols.size(); }

bool Matrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_ + r) = field_.one();
  }
  Echelon e = eliminate(std::move(aug));
  if (e.pivot_cols.size() < rows_ || e.pivot_cols[rows_ - 1] >= cols_) {
    throw std::invalid_argument("matrix is singular");
  }
  Matrix inv(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = e.reduced(r, cols_ + c);
  return inv;
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Echelon e = eliminate(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, field_.zero());
    v[free] = field_.one();
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

}  // namespace kronmod
