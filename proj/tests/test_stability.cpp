#include <gtest/gtest.h>

#include "helpers.hpp"

namespace kronmod {
namespace {

using testing::module;
using testing::var;

const Field Q = Field::rational();

TEST(Semistable, Examples) {
  EXPECT_TRUE(is_semistable(nu1_module(Q)));
  EXPECT_TRUE(is_semistable(module(var(Q, 0), var(Q, 1), LinForm(Q), var(Q, 0))));
  EXPECT_FALSE(is_semistable(KModule(Q)));
}

TEST(Stable, Examples) {
  EXPECT_TRUE(is_stable(nu1_module(Q)));
  EXPECT_FALSE(is_stable(module(var(Q, 0), var(Q, 1), LinForm(Q), var(Q, 0))));
  EXPECT_TRUE(is_stable(normal_form_module(Q.one(), Q.zero(), Q.zero(), Q.zero(), Q.zero())));
}

TEST(KingOracle, NilpotentWitness) {
  StabilityVerdict v = king_oracle(module(var(Q, 0), var(Q, 1), LinForm(Q), var(Q, 0)));
  EXPECT_TRUE(v.semistable);
  EXPECT_FALSE(v.stable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->dim_k, 1u);
  EXPECT_EQ(v.witness->dim_l, 1u);
  ASSERT_EQ(v.witness->k_basis.size(), 1u);
  ASSERT_EQ(v.witness->l_basis.size(), 1u);
  EXPECT_TRUE(v.witness->k_basis[0][1].is_zero());
  EXPECT_TRUE(v.witness->l_basis[0][1].is_zero());
}

TEST(KingOracle, ZeroColumn) {
  StabilityVerdict v = king_oracle(module(var(Q, 0), LinForm(Q), var(Q, 1), LinForm(Q)));
  EXPECT_FALSE(v.semistable);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->dim_k, 1u);
  EXPECT_EQ(v.witness->dim_l, 0u);
  EXPECT_TRUE(v.witness->k_basis[0][0].is_zero());
}

TEST(KingOracle, IrrationalWitness) {
  // det = x^2 - 2y^2 splits only over Q(sqrt 2): the (1, 1) witness is flagged.
  KModule phi = module(var(Q, 0), var(Q, 1) * Q.from_int(2), var(Q, 1), var(Q, 0));
  StabilityVerdict v = king_oracle(phi);
  EXPECT_TRUE(v.semistable);
  EXPECT_FALSE(v.stable);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(v.witness->over_extension);
  EXPECT_FALSE(v.witness->k_polynomial.empty());
}

// Brute-force oracle over a small field: every line K of the source, with the
// dimension of the span of its images under the four slices.
struct Brute {
  bool semistable = true;
  bool rational_destabilizer = false;
};

Brute brute_force(const KModule& phi) {
  const Field& f = phi.field();
  const std::uint64_t p = f.modulus();
  Brute out;
  auto image_rank = [&](const std::vector<std::vector<Scalar>>& sources) {
    Matrix m(f, 2, 4 * sources.size());
    for (std::size_t s = 0; s < sources.size(); ++s)
      for (std::size_t k = 0; k < 4; ++k) {
        auto col = phi.slice(k).apply(sources[s]);
        m(0, 4 * s + k) = col[0];
        m(1, 4 * s + k) = col[1];
      }
    return m.rank();
  };
  std::vector<std::vector<Scalar>> lines = {{f.zero(), f.one()}};
  for (std::uint64_t t = 0; t < p; ++t) lines.push_back({f.one(), f.from_int(static_cast<long long>(t))});
  for (const auto& v : lines) {
    std::size_t d = image_rank({v});
    if (d == 0) out.semistable = false;
    if (d <= 1) out.rational_destabilizer = true;
  }
  if (image_rank({{f.one(), f.zero()}, {f.zero(), f.one()}}) <= 1) {
    out.semistable = false;
    out.rational_destabilizer = true;
  }
  return out;
}

TEST(KingOracle, AgreesWithBruteForceOverF7) {
  const Field f = Field::prime(7);
  Sampler s = testing::sampler(f, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    KModule phi(f);
    // Sparse entries make degenerate modules common.
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t k = 0; k < 4; ++k)
          if (s.integer(0, 2) == 0) phi(r, c)[k] = s.scalar();
    Brute b = brute_force(phi);
    StabilityVerdict v = king_oracle(phi);
    ASSERT_EQ(is_semistable(phi), b.semistable) << phi.to_string();
    ASSERT_EQ(v.semistable, b.semistable) << phi.to_string();
    if (b.rational_destabilizer) {
      ASSERT_FALSE(is_stable(phi)) << phi.to_string();
    } else if (!is_stable(phi)) {
      ASSERT_TRUE(v.witness && v.witness->over_extension) << phi.to_string();
    }
    ASSERT_EQ(v.stable, is_stable(phi)) << phi.to_string();
  }
}

TEST(KingOracle, WitnessesAreSubmodules) {
  for (const Field& f : {Q, Field::prime(1009)}) {
    Sampler s = testing::sampler(f, 21);
    for (int trial = 0; trial < 300; ++trial) {
      KModule phi(f);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          for (std::size_t k = 0; k < 4; ++k)
            if (s.integer(0, 3) == 0) phi(r, c)[k] = s.scalar();
      StabilityVerdict v = king_oracle(phi);
      if (!v.witness || v.witness->over_extension) continue;
      const Destabilizer& w = *v.witness;
      ASSERT_EQ(w.k_basis.size(), w.dim_k);
      // Each image of K lies in L: rank does not grow when appended to L.
      Matrix l(f, 2, w.dim_l);
      for (std::size_t j = 0; j < w.dim_l; ++j) {
        l(0, j) = w.l_basis[j][0];
        l(1, j) = w.l_basis[j][1];
      }
      for (const auto& kv : w.k_basis)
        for (std::size_t k = 0; k < 4; ++k) {
          auto image = phi.slice(k).apply(kv);
          Matrix joined(f, 2, w.dim_l + 1);
          for (std::size_t j = 0; j < w.dim_l; ++j) {
            joined(0, j) = l(0, j);
            joined(1, j) = l(1, j);
          }
          joined(0, w.dim_l) = image[0];
          joined(1, w.dim_l) = image[1];
          EXPECT_EQ(joined.rank(), w.dim_l) << phi.to_string();
        }
    }
  }
}

TEST(Stability, InvariantUnderBothActions) {
  Sampler s = testing::sampler(Q, 22);
  for (int trial = 0; trial < 100; ++trial) {
    KModule phi(Q);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        if (s.coin()) phi(r, c) = s.lin_form();
    KModule moved = apply_coord_change(random_coord_change(s), act(random_group_elem(s), phi));
    EXPECT_EQ(is_semistable(moved), is_semistable(phi));
    EXPECT_EQ(is_stable(moved), is_stable(phi));
  }
}

}  // namespace
}  // namespace kronmod
