#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "kronmod/forms.hpp"

namespace kronmod {

/// A 2x2 matrix of linear forms, i.e. a map C^2 -> C^2 (x) V. Entries are
/// addressed (row, col) with 0-based indices; phi(0, 1) is phi_12.
template <std::size_t N>
class Pencil {
 public:
  explicit Pencil(const Field& field = Field())
      : entries_{LinearForm<N>(field), LinearForm<N>(field), LinearForm<N>(field),
                 LinearForm<N>(field)} {}
  Pencil(LinearForm<N> p11, LinearForm<N> p12, LinearForm<N> p21, LinearForm<N> p22)
      : entries_{std::move(p11), std::move(p12), std::move(p21), std::move(p22)} {}

  const Field& field() const noexcept { return entries_[0].field(); }
  const LinearForm<N>& operator()(std::size_t r, std::size_t c) const { return entries_[2 * r + c]; }
  LinearForm<N>& operator()(std::size_t r, std::size_t c) { return entries_[2 * r + c]; }

  /// Constant 2x2 coefficient matrix of the k-th variable, so that
  /// phi = sum_k slice(k) * x_k.
  Matrix slice(std::size_t k) const {
    Matrix m(field(), 2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(r, c) = (*this)(r, c)[k];
    return m;
  }

  static Pencil from_slices(const std::array<Matrix, N>& slices) {
    Pencil p(slices[0].field());
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) p(r, c)[k] = slices[k](r, c);
    return p;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  Pencil& operator*=(const Scalar& s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }
  friend Pencil operator*(Pencil p, const Scalar& s) { return p *= s; }
  friend bool operator==(const Pencil& a, const Pencil& b) { return a.entries_ == b.entries_; }

  std::string to_string() const {
    return "[[" + entries_[0].to_string() + ", " + entries_[1].to_string() + "], [" +
           entries_[2].to_string() + ", " + entries_[3].to_string() + "]]";
  }

 private:
  std::array<LinearForm<N>, 4> entries_;
};

using KModule = Pencil<4>;
using TernaryModule = Pencil<3>;

/// Element (g, h) of GL(2) x GL(2), acting by phi -> h phi g^{-1}. Pairs are
/// stored as given; the scalar quotient is only visible through the
/// semi-invariants.
class GroupElem {
 public:
  /// Throws std::invalid_argument unless both are invertible 2x2 matrices.
  GroupElem(Matrix g, Matrix h);
  static GroupElem identity(const Field& field);

  const Matrix& g() const noexcept { return g_; }
  const Matrix& h() const noexcept { return h_; }
  const Matrix& g_inverse() const noexcept { return g_inv_; }

  GroupElem inverse() const;
  /// act(a * b, phi) == act(a, act(b, phi)).
  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.g_ == b.g_ && a.h_ == b.h_;
  }

 private:
  Matrix g_, h_, g_inv_;
};

template <std::size_t N>
Pencil<N> act(const GroupElem& gh, const Pencil<N>& phi) {
  const Matrix& h = gh.h();
  const Matrix& gi = gh.g_inverse();
  Pencil<N> out(phi.field());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          Scalar c = h(i, k) * gi(l, j);
          if (!c.is_zero()) out(i, j) += phi(k, l) * c;
        }
  return out;
}

/// det(phi) = phi_11 phi_22 - phi_12 phi_21.
template <std::size_t N>
QuadraticForm<N> det_semiinvariant(const Pencil<N>& phi) {
  return QuadraticForm<N>::product(phi(0, 0), phi(1, 1)) -
         QuadraticForm<N>::product(phi(0, 1), phi(1, 0));
}

template <std::size_t N>
Pencil<N> apply_coord_change(const CoordChange<N>& c, const Pencil<N>& phi) {
  return Pencil<N>(apply_coord_change(c, phi(0, 0)), apply_coord_change(c, phi(0, 1)),
                   apply_coord_change(c, phi(1, 0)), apply_coord_change(c, phi(1, 1)));
}

/// e(phi) = phi_11 ^ phi_22 ^ phi_12 ^ phi_21 as a multiple of x^y^z^w.
/// In the dual basis of {x, y, z, w} this is also epsilon(phi).
Scalar e_semiinvariant(const KModule& phi);
inline Scalar epsilon(const KModule& phi) { return e_semiinvariant(phi); }

/// Wedge of the four partial derivatives of det(phi).
Scalar rho(const KModule& phi);

/// Keeps the coefficients of the listed variables (strictly increasing).
TernaryModule project_module(const KModule& phi, const std::array<std::size_t, 3>& kept);
/// Projection along w.
inline TernaryModule project_module(const KModule& phi) { return project_module(phi, {0, 1, 2}); }
/// Inverse of the projection along w: the module with zero w-coefficients.
KModule embed_module(const TernaryModule& psi);

/// Injectivity as a map 2O(-1,-1) -> 2O on the Segre quadric: false iff
/// det(phi) is a multiple of xw - yz (zero included).
bool is_injective_on_quadric(const KModule& phi);

/// Whether two semi-stable modules lie in the same class, decided by
/// comparing (det, e) in the weighted projective space.
/// Throws std::invalid_argument if either input is not semi-stable.
bool class_equal(const KModule& phi1, const KModule& phi2);

}  // namespace kronmod
