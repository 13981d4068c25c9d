#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kronmod/kronecker.hpp"

namespace kronmod {

/// A pair of subspaces (K in the source, L in the target) with M_i K in L
/// for every slice M_i.
struct Destabilizer {
  std::size_t dim_k = 0;
  std::size_t dim_l = 0;
  /// Spanning vectors. Empty when the subspace is only defined over a
  /// quadratic extension (see k_polynomial).
  std::vector<std::vector<Scalar>> k_basis;
  std::vector<std::vector<Scalar>> l_basis;
  /// For dim_k == 1 without a rational generator: K = span(1, t) with t a
  /// root of this polynomial (coefficients by increasing degree).
  std::vector<Scalar> k_polynomial;
  bool over_extension = false;
};

struct StabilityVerdict {
  bool semistable = false;
  bool stable = false;
  std::optional<Destabilizer> witness;
};

/// det(phi) != 0.
bool is_semistable(const KModule& phi);
/// det(phi) irreducible over the algebraic closure, i.e. Gram rank >= 3.
bool is_stable(const KModule& phi);

/// Subrepresentation search independent of the determinant: semistability
/// fails iff some pair has dim L < dim K, stability fails iff some proper
/// nonzero pair has dim L <= dim K. One-dimensional K are decided by the gcd
/// of the minors of [M_x k | M_y k | M_z k | M_w k] over k = (1, t), plus
/// k = (0, 1).
StabilityVerdict king_oracle(const KModule& phi);

}  // namespace kronmod
