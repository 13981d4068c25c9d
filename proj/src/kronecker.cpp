#include "kronmod/kronecker.hpp"

#include "kronmod/moduli.hpp"

namespace kronmod {

GroupElem::GroupElem(Matrix g, Matrix h) : g_(std::move(g)), h_(std::move(h)) {
  if (g_.rows() != 2 || g_.cols() != 2 || h_.rows() != 2 || h_.cols() != 2) {
    throw std::invalid_argument("group element: expected 2x2 matrices");
  }
  if (!g_.is_invertible() || !h_.is_invertible()) {
    throw std::invalid_argument("group element: singular matrix");
  }
  g_inv_ = g_.inverse();
}

GroupElem GroupElem::identity(const Field& field) {
  return GroupElem(Matrix::identity(field, 2), Matrix::identity(field, 2));
}

GroupElem GroupElem::inverse() const { return GroupElem(g_inv_, h_.inverse()); }

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  return GroupElem(a.g_ * b.g_, a.h_ * b.h_);
}

Scalar e_semiinvariant(const KModule& phi) {
  return wedge4(phi(0, 0), phi(1, 1), phi(0, 1), phi(1, 0));
}

Scalar rho(const KModule& phi) {
  const QuadForm d = det_semiinvariant(phi);
  return wedge4(internal_product(0, d), internal_product(1, d), internal_product(2, d),
                internal_product(3, d));
}

TernaryModule project_module(const KModule& phi, const std::array<std::size_t, 3>& kept) {
  if (!(kept[0] < kept[1] && kept[1] < kept[2] && kept[2] < 4)) {
    throw std::invalid_argument("project_module: kept variables must be increasing in 0..3");
  }
  TernaryModule out(phi.field());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 3; ++k) out(r, c)[k] = phi(r, c)[kept[k]];
  return out;
}

KModule embed_module(const TernaryModule& psi) {
  KModule out(psi.field());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 3; ++k) out(r, c)[k] = psi(r, c)[k];
  return out;
}

bool is_injective_on_quadric(const KModule& phi) {
  const Field& f = phi.field();
  QuadForm segre(f);
  segre.coeff(0, 3) = f.one();
  segre.coeff(1, 2) = -f.one();
  QuadForm d = det_semiinvariant(phi);
  return !(d - segre * d.coeff(0, 3)).is_zero();
}

bool class_equal(const KModule& phi1, const KModule& phi2) {
  return eta(phi1) == eta(phi2);
}

}  // namespace kronmod
