#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "kronmod/errors.hpp"
#include "kronmod/field.hpp"
#include "kronmod/matrix.hpp"

namespace kronmod {

/// Names of the basis vectors by position: x, y, z, w.
inline constexpr std::array<const char*, 4> kVariableNames = {"x", "y", "z", "w"};

/// Element of V (or of a coordinate subspace) in the fixed basis x, y, z, w.
template <std::size_t N>
class LinearForm {
 public:
  explicit LinearForm(const Field& field = Field()) : field_(field) { coeffs_.fill(field.zero()); }
  LinearForm(const Field& field, const std::array<long long, N>& coeffs) : field_(field) {
    for (std::size_t i = 0; i < N; ++i) coeffs_[i] = field.from_int(coeffs[i]);
  }

  static LinearForm variable(const Field& field, std::size_t i) {
    LinearForm l(field);
    l.coeffs_.at(i) = field.one();
    return l;
  }

  const Field& field() const noexcept { return field_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  LinearForm& operator+=(const LinearForm& o) {
    for (std::size_t i = 0; i < N; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    for (std::size_t i = 0; i < N; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  LinearForm& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  LinearForm operator-() const {
    LinearForm out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Scalar& s) { return a *= s; }
  friend LinearForm operator*(const Scalar& s, LinearForm a) { return a *= s; }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::array<Scalar, N> coeffs_;
};

/// Element of S^2 of an N-dimensional space.
///
/// Coefficients are stored per monomial in the order x^2, xy, xz, xw, y^2,
/// yz, yw, z^2, zw, w^2 (restricted to the first N variables). The Gram view
/// has the squares on the diagonal and half the mixed coefficients off it.
template <std::size_t N>
class QuadraticForm {
 public:
  static constexpr std::size_t kMonomials = N * (N + 1) / 2;

  static constexpr std::size_t index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * N - (i * (i - 1)) / 2 + (j - i);
  }

  explicit QuadraticForm(const Field& field = Field()) : field_(field) {
    coeffs_.fill(field.zero());
  }

  /// The product l1 * l2.
  static QuadraticForm product(const LinearForm<N>& l1, const LinearForm<N>& l2) {
    QuadraticForm q(l1.field());
    for (std::size_t i = 0; i < N; ++i) {
      q.coeffs_[index(i, i)] = l1[i] * l2[i];
      for (std::size_t j = i + 1; j < N; ++j) q.coeffs_[index(i, j)] = l1[i] * l2[j] + l1[j] * l2[i];
    }
    return q;
  }

  static QuadraticForm from_gram(const Matrix& gram) {
    if (gram.rows() != N || gram.cols() != N) throw std::invalid_argument("Gram matrix shape");
    QuadraticForm q(gram.field());
    for (std::size_t i = 0; i < N; ++i) {
      q.coeffs_[index(i, i)] = gram(i, i);
      for (std::size_t j = i + 1; j < N; ++j) q.coeffs_[index(i, j)] = gram(i, j) + gram(j, i);
    }
    return q;
  }

  const Field& field() const noexcept { return field_; }

  /// Coefficient of the monomial x_i x_j (either order).
  const Scalar& coeff(std::size_t i, std::size_t j) const { return coeffs_[index(i, j)]; }
  Scalar& coeff(std::size_t i, std::size_t j) { return coeffs_[index(i, j)]; }
  /// Coefficient by monomial position in the storage order.
  const Scalar& monomial(std::size_t k) const { return coeffs_.at(k); }
  Scalar& monomial(std::size_t k) { return coeffs_.at(k); }

  Matrix gram() const {
    Matrix g(field_, N, N);
    Scalar half = field_.from_int(2).inverse();
    for (std::size_t i = 0; i < N; ++i) {
      g(i, i) = coeff(i, i);
      for (std::size_t j = i + 1; j < N; ++j) g(i, j) = g(j, i) = coeff(i, j) * half;
    }
    return g;
  }

  Scalar evaluate(const std::array<Scalar, N>& v) const {
    Scalar s = field_.zero();
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) s += coeff(i, j) * v[i] * v[j];
    return s;
  }

  /// Sets the k-th variable to zero and drops it.
  QuadraticForm<N - 1> drop_variable(std::size_t k) const {
    QuadraticForm<N - 1> out(field_);
    for (std::size_t i = 0, ii = 0; i < N; ++i) {
      if (i == k) continue;
      for (std::size_t j = i, jj = ii; j < N; ++j) {
        if (j == k) continue;
        out.coeff(ii, jj) = coeff(i, j);
        ++jj;
      }
      ++ii;
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  QuadraticForm& operator+=(const QuadraticForm& o) {
    for (std::size_t i = 0; i < kMonomials; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  QuadraticForm& operator-=(const QuadraticForm& o) {
    for (std::size_t i = 0; i < kMonomials; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  QuadraticForm& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm& b) { return a += b; }
  friend QuadraticForm operator-(QuadraticForm a, const QuadraticForm& b) { return a -= b; }
  friend QuadraticForm operator*(QuadraticForm a, const Scalar& s) { return a *= s; }
  friend QuadraticForm operator*(const Scalar& s, QuadraticForm a) { return a *= s; }
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Monomial label in the storage order: "x2", "xy", ...
  static std::string monomial_name(std::size_t k);
  std::string to_string() const;

 private:
  Field field_;
  std::array<Scalar, kMonomials> coeffs_;
};

/// Invertible change of basis of an N-dimensional space, acting on forms by
/// substitution of variables: q(X) becomes q(M X). Composition is
/// contravariant: apply(b, apply(a, q)) == apply(a * b, q).
template <std::size_t N>
class CoordChange {
 public:
  explicit CoordChange(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != N || m_.cols() != N) throw std::invalid_argument("coordinate change shape");
    if (!m_.is_invertible()) throw std::invalid_argument("coordinate change is singular");
  }
  static CoordChange identity(const Field& field) { return CoordChange(Matrix::identity(field, N)); }

  const Matrix& matrix() const noexcept { return m_; }
  Scalar determinant() const { return m_.determinant(); }
  CoordChange inverse() const { return CoordChange(m_.inverse()); }

  friend CoordChange operator*(const CoordChange& a, const CoordChange& b) {
    return CoordChange(a.m_ * b.m_);
  }
  friend bool operator==(const CoordChange& a, const CoordChange& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

using LinForm = LinearForm<4>;
using QuadForm = QuadraticForm<4>;
using TernaryLinForm = LinearForm<3>;
using TernaryQuadForm = QuadraticForm<3>;

/// Partial derivative of q with respect to the i-th variable (0-based), so
/// internal_product(0, x^2) == 2x.
template <std::size_t N>
LinearForm<N> internal_product(std::size_t i, const QuadraticForm<N>& q) {
  if (i >= N) throw std::out_of_range("variable index");
  LinearForm<N> out(q.field());
  for (std::size_t j = 0; j < N; ++j) {
    out[j] = q.coeff(i, j);
    if (j == i) out[j] += q.coeff(i, i);
  }
  return out;
}

/// Coefficient of l1 ^ l2 ^ l3 ^ l4 against x ^ y ^ z ^ w.
Scalar wedge4(const LinForm& l1, const LinForm& l2, const LinForm& l3, const LinForm& l4);

template <std::size_t N>
std::size_t gram_rank(const QuadraticForm<N>& q) {
  return q.gram().rank();
}

/// Writes q as a product u * u' over the active field.
///
/// Preconditions: q != 0 and gram_rank(q) <= 2 (std::invalid_argument
/// otherwise). Throws NeedsExtension when the factors are only defined over
/// a quadratic extension.
template <std::size_t N>
std::pair<LinearForm<N>, LinearForm<N>> factor_quadric(const QuadraticForm<N>& q);

template <std::size_t N>
LinearForm<N> apply_coord_change(const CoordChange<N>& c, const LinearForm<N>& l) {
  const Matrix& m = c.matrix();
  LinearForm<N> out(l.field());
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i) out[j] += m(i, j) * l[i];
  return out;
}

template <std::size_t N>
QuadraticForm<N> apply_coord_change(const CoordChange<N>& c, const QuadraticForm<N>& q) {
  const Matrix& m = c.matrix();
  return QuadraticForm<N>::from_gram(m.transpose() * q.gram() * m);
}

/// Block-diagonal extension of a change of the first three variables.
CoordChange<4> extend_by_last_variable(const CoordChange<3>& c);

extern template class LinearForm<3>;
extern template class LinearForm<4>;
extern template class QuadraticForm<3>;
extern template class QuadraticForm<4>;

}  // namespace kronmod
