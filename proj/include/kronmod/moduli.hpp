#pragma once

#include <vector>

#include "kronmod/kronecker.hpp"
#include "kronmod/normal_form.hpp"

namespace kronmod {

/// Point <q, p> of the weighted projective space P(S^2 V + L^4 V) with
/// weights (1, 2): (q, p) ~ (t q, t^2 p).
///
/// Stored in canonical form: the first nonzero coefficient of q (monomial
/// order x^2, xy, ..., w^2) is 1. If q = 0 then p is replaced by the
/// representative of its square class (over Q a squarefree integer, over
/// F_p 1 or the smallest non-residue), which is the weighted analogue of
/// scaling it to 1.
class WPoint {
 public:
  /// Throws std::invalid_argument if q and p are both zero.
  WPoint(const QuadForm& q, const Scalar& p);

  const QuadForm& q() const noexcept { return q_; }
  const Scalar& p() const noexcept { return p_; }
  const Field& field() const noexcept { return q_.field(); }

  friend bool operator==(const WPoint& a, const WPoint& b) { return a.q_ == b.q_ && a.p_ == b.p_; }
  std::string to_string() const;

 private:
  QuadForm q_;
  Scalar p_;
};

/// Determinant of the coefficient matrix of the four partial derivatives
/// of q (16 times the Gram determinant).
Scalar resultant(const QuadForm& q);

/// <det(phi), e(phi)>. Throws std::invalid_argument unless semistable.
WPoint eta(const KModule& phi);

/// res(q) == p^2; independent of the representative.
bool on_hypersurface(const WPoint& point);

KModule nu1_module(const Field& field);
KModule nu2_module(const Field& field);
WPoint nu1(const Field& field);
WPoint nu2(const Field& field);

struct Fiber {
  /// The points over q: two when res(q) is a nonzero square, one when
  /// res(q) = 0, none when the square root needs an extension.
  std::vector<WPoint> points;
  bool needs_extension = false;
};

/// Preimage of <q> under the double cover <q, p> -> <q>. Requires q != 0.
Fiber det_fiber(const QuadForm& q);

/// A module with eta(phi) == point. Requires point on the hypersurface and
/// q != 0. Reducible q are realized as diag(u, u').
KModule eta_inverse(const WPoint& point, const SearchOptions& opts = {});

}  // namespace kronmod
