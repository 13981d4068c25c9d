#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kronmod/field.hpp"

namespace kronmod {

/// Dense matrix over a Field with exact Gaussian elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Small integer matrices, mostly for tests and fixed constructions.
  static Matrix from_ints(const Field& field,
                          std::initializer_list<std::initializer_list<long long>> rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Scalar determinant() const;
  std::size_t rank() const;
  bool is_invertible() const;
  /// Throws std::invalid_argument for singular or non-square input.
  Matrix inverse() const;
  /// Basis of the right null space {v : M v = 0}.
  std::vector<std::vector<Scalar>> kernel() const;
  bool is_zero() const;

  Matrix& operator*=(const Scalar& s);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace kronmod
