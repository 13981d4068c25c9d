#include "kronmod/samplers.hpp"

#include "kronmod/stability.hpp"

namespace kronmod {

namespace {

void count(std::size_t* rejected) {
  if (rejected) ++*rejected;
}

Binary binary(Sampler& s) { return {s.scalar(), s.scalar()}; }

}  // namespace

KModule random_module(Sampler& s) {
  return KModule(s.lin_form(), s.lin_form(), s.lin_form(), s.lin_form());
}

GroupElem random_group_elem(Sampler& s) { return GroupElem(s.invertible(2), s.invertible(2)); }

CoordChange<4> random_coord_change(Sampler& s) { return CoordChange<4>(s.invertible(4)); }

KModule random_stable_module(Sampler& s, std::size_t* rejected) {
  for (;;) {
    KModule phi = random_module(s);
    if (is_stable(phi)) return phi;
    count(rejected);
  }
}

KModule random_semistable_module(Sampler& s, std::size_t* rejected) {
  for (;;) {
    KModule phi = random_module(s);
    if (is_semistable(phi)) return phi;
    count(rejected);
  }
}

ScrambledNormalForm random_scrambled_normal_form(Sampler& s, std::size_t* rejected) {
  for (;;) {
    Scalar lambda = s.nonzero_scalar();
    Scalar a = s.scalar(), b = s.scalar(), c = s.scalar(), d = s.scalar();
    KModule original = normal_form_module(lambda, a, b, c, d);
    if (!is_stable(original)) {
      count(rejected);
      continue;
    }
    GroupElem gh = random_group_elem(s);
    CoordChange<4> upsilon = random_coord_change(s);
    KModule scrambled = act(gh, apply_coord_change(upsilon, original));
    return {lambda, a, b, c, d, std::move(original), std::move(scrambled)};
  }
}

BigPsi random_psi(Sampler& s, Region region, std::size_t* rejected) {
  if (region == Region::Invalid) throw std::invalid_argument("random_psi: no sampler for Invalid");
  const Field& f = s.field();
  for (;;) {
    BigPsi psi(f);
    psi.a1 = region == Region::W2 ? f.zero() : s.nonzero_scalar();
    psi.a2 = region == Region::W1 ? f.zero() : s.nonzero_scalar();
    for (Binary* b : {&psi.u11, &psi.v11, &psi.u12, &psi.v12, &psi.u21, &psi.v21, &psi.u22, &psi.v22}) {
      *b = binary(s);
    }
    for (LinForm* l : {&psi.f11, &psi.f12, &psi.f21, &psi.f22}) *l = s.lin_form();
    if (classify(psi) == region) return psi;
    count(rejected);
  }
}

BigGroupElem random_big_group_elem(Sampler& s) {
  const Field& f = s.field();
  const auto src = psi_source_twists();
  const auto tgt = psi_target_twists();
  auto fill = [&](BiMatrix& m) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Bidegree d = m.degree(i, j);
        if (!d.nonnegative()) continue;
        BiForm form(f, d);
        for (int a = 0; a <= d.r; ++a)
          for (int b = 0; b <= d.s; ++b) form.set_coeff(a, b, s.scalar());
        m.set(i, j, form);
      }
  };
  for (;;) {
    BiMatrix g(f, src, src), h(f, tgt, tgt);
    fill(g);
    fill(h);
    if (g.block(0, 0, 2, 2).constant().is_invertible() && g.block(2, 2, 2, 2).constant().is_invertible() &&
        h.block(0, 0, 2, 2).constant().is_invertible() && h.block(2, 2, 2, 2).constant().is_invertible()) {
      return BigGroupElem(std::move(g), std::move(h));
    }
  }
}

}  // namespace kronmod
