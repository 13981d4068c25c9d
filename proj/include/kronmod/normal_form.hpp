#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "kronmod/kronecker.hpp"

namespace kronmod {

/// Seed and trial budget of the randomized searches (splitting directions,
/// isotropic vectors). Searches are deterministic functions of these.
struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 10'000;
};

/// Reduction certificate of a stable module:
///   act(gh, apply_coord_change(upsilon, input)) == module()
/// where module() = [[x + a w, y + b w], [lambda z + c w, x + d w]].
struct NormalForm {
  Scalar lambda, a, b, c, d;
  CoordChange<4> upsilon;
  GroupElem gh;

  KModule module() const;
  /// Applies the certificate to a module.
  KModule replay(const KModule& input) const;
};

/// The module [[x + a w, y + b w], [lambda z + c w, x + d w]].
KModule normal_form_module(const Scalar& lambda, const Scalar& a, const Scalar& b,
                           const Scalar& c, const Scalar& d);

/// index-th candidate splitting for a quadric q: indices 0..3 drop w, z, y,
/// x in turn; larger indices use seeded random hyperplanes w = r.(x, y, z).
/// Returns the coordinate change when the projection along the last
/// variable of q has Gram rank 3.
std::optional<CoordChange<4>> splitting_candidate(const QuadForm& q, std::size_t index,
                                                  std::uint64_t seed);

/// First valid splitting within the budget. Requires gram_rank(q) >= 3;
/// throws std::runtime_error when the budget is exhausted.
CoordChange<4> choose_splitting(const QuadForm& q, const SearchOptions& opts = {});
CoordChange<4> choose_splitting(const KModule& phi, const SearchOptions& opts = {});

struct ConicNormalization {
  CoordChange<3> change;
  /// Square-class representative with apply(change, t) == lambda (x^2 - yz).
  Scalar lambda;
};

/// Brings a rank-3 ternary form to lambda (x^2 - yz) via an isotropic vector
/// and a hyperbolic pair. Over Q throws NeedsExtension if no rational
/// isotropic vector turns up within the budget.
ConicNormalization conic_normalize(const TernaryQuadForm& t, const SearchOptions& opts = {});

struct QuadricSplitting {
  CoordChange<4> upsilon;
  /// apply(upsilon, q) with w set to 0 equals lambda (x^2 - yz).
  Scalar lambda;
};

/// Splitting of a quadric of Gram rank >= 3 whose projected conic normalizes.
/// Over Q first looks for a rational smooth point of q by height within the
/// budget and throws NeedsExtension if there is none.
QuadricSplitting split_quadric(const QuadForm& q, const SearchOptions& opts = {});
/// Splitting through a known smooth point of q, which makes the projected
/// conic isotropic. No extension is ever needed.
QuadricSplitting split_quadric(const QuadForm& q, const std::array<Scalar, 4>& isotropic,
                               const SearchOptions& opts = {});

/// For a three-variable module with det(psi) == x^2 - lambda yz, returns
/// (g, h) with act((g, h), psi) == [[x, y], [lambda z, x]].
GroupElem conify(const TernaryModule& psi, const Scalar& lambda);

/// Full reduction of a stable module. The group can rescale det by any
/// nonzero scalar, so lambda is always 1 in the result.
NormalForm normal_form(const KModule& phi, const SearchOptions& opts = {});

/// Reduction in prescribed coordinates: requires the projection along w of
/// apply(upsilon, phi) to have determinant proportional to x^2 - yz.
NormalForm normal_form_in_coordinates(const KModule& phi, const CoordChange<4>& upsilon);

/// A group element carrying phi1 to phi2 when both are stable and in the
/// same class; nullopt otherwise.
std::optional<GroupElem> orbit_witness(const KModule& phi1, const KModule& phi2,
                                       const SearchOptions& opts = {});

}  // namespace kronmod
