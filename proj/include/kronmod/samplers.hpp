#pragma once

#include <cstddef>

#include "kronmod/blowdown.hpp"
#include "kronmod/random.hpp"

namespace kronmod {

KModule random_module(Sampler& s);
GroupElem random_group_elem(Sampler& s);
CoordChange<4> random_coord_change(Sampler& s);

/// Stable module drawn by rejection; `rejected` counts discarded draws.
KModule random_stable_module(Sampler& s, std::size_t* rejected = nullptr);
KModule random_semistable_module(Sampler& s, std::size_t* rejected = nullptr);

/// A normal-form module with random parameters, hidden by a random group
/// element and coordinate change. Rejects unstable parameter choices.
struct ScrambledNormalForm {
  Scalar lambda, a, b, c, d;
  KModule original;   // [[x + a w, y + b w], [lambda z + c w, x + d w]]
  KModule scrambled;  // act(gh, apply(upsilon, original))
};
ScrambledNormalForm random_scrambled_normal_form(Sampler& s, std::size_t* rejected = nullptr);

/// Uniform psi in the given region (W0, W1 or W2) by rejection.
BigPsi random_psi(Sampler& s, Region region, std::size_t* rejected = nullptr);
BigGroupElem random_big_group_elem(Sampler& s);

}  // namespace kronmod
