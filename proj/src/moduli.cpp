#include "kronmod/moduli.hpp"

#include "kronmod/stability.hpp"

namespace kronmod {

WPoint::WPoint(const QuadForm& q, const Scalar& p) : q_(q), p_(p) {
  if (q.field() != p.field()) throw std::invalid_argument("WPoint: mixed fields");
  for (std::size_t k = 0; k < QuadForm::kMonomials; ++k) {
    if (q_.monomial(k).is_zero()) continue;
    Scalar t = q_.monomial(k).inverse();
    q_ *= t;
    p_ *= t * t;
    return;
  }
  if (p_.is_zero()) throw std::invalid_argument("WPoint: q and p are both zero");
  p_ = p_.field().square_class(p_);
}

std::string WPoint::to_string() const { return "<" + q_.to_string() + ", " + p_.to_string() + ">"; }

Scalar resultant(const QuadForm& q) {
  return wedge4(internal_product(0, q), internal_product(1, q), internal_product(2, q),
                internal_product(3, q));
}

WPoint eta(const KModule& phi) {
  QuadForm d = det_semiinvariant(phi);
  if (d.is_zero()) throw std::invalid_argument("eta: module is not semistable");
  return WPoint(d, epsilon(phi));
}

bool on_hypersurface(const WPoint& point) { return resultant(point.q()) == point.p() * point.p(); }

KModule nu1_module(const Field& field) {
  auto var = [&](std::size_t i) { return LinForm::variable(field, i); };
  return KModule(var(0), var(1), var(2), var(3));
}

KModule nu2_module(const Field& field) {
  auto var = [&](std::size_t i) { return LinForm::variable(field, i); };
  return KModule(var(0), var(2), var(1), var(3));
}

WPoint nu1(const Field& field) { return eta(nu1_module(field)); }
WPoint nu2(const Field& field) { return eta(nu2_module(field)); }

Fiber det_fiber(const QuadForm& q) {
  if (q.is_zero()) throw std::invalid_argument("det_fiber: q is zero");
  Fiber fiber;
  auto r = sqrt_if_square(resultant(q));
  if (!r) {
    fiber.needs_extension = true;
  } else if (r->is_zero()) {
    fiber.points.emplace_back(q, *r);
  } else {
    fiber.points.emplace_back(q, *r);
    fiber.points.emplace_back(q, -*r);
  }
  return fiber;
}

KModule eta_inverse(const WPoint& point, const SearchOptions& opts) {
  const QuadForm& q = point.q();
  const Field& f = point.field();
  if (q.is_zero()) throw std::invalid_argument("eta_inverse: q is zero");
  if (!on_hypersurface(point)) throw std::invalid_argument("eta_inverse: point is not on res(q) = p^2");

  if (gram_rank(q) <= 2) {
    auto [u, u2] = factor_quadric(q);
    return KModule(u, LinForm(f), LinForm(f), u2);
  }

  // In split coordinates q / lambda reads x^2 - yz + (a+d) xw - c yw - b zw + (ad-bc) w^2
  // and the weight-two coordinate is d - a.
  QuadricSplitting split = split_quadric(q, opts);
  Scalar inv = split.lambda.inverse();
  QuadForm q3 = apply_coord_change(split.upsilon, q) * inv;
  Scalar p3 = split.upsilon.determinant() * point.p() * inv * inv;
  Scalar half = f.from_int(2).inverse();
  Scalar trace = q3.coeff(0, 3);
  Scalar c = -q3.coeff(1, 3);
  Scalar b = -q3.coeff(2, 3);
  Scalar a = (trace - p3) * half;
  Scalar d = (trace + p3) * half;
  if (a * d - b * c != q3.coeff(3, 3)) {
    throw std::logic_error("eta_inverse: constant term inconsistent on " + point.to_string());
  }
  KModule phi = apply_coord_change(split.upsilon.inverse(), normal_form_module(f.one(), a, b, c, d));
  if (eta(phi) != point) throw std::logic_error("eta_inverse: round trip failed on " + point.to_string());
  return phi;
}

}  // namespace kronmod
