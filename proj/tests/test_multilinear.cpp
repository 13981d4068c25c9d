#include <gtest/gtest.h>

#include "helpers.hpp"

namespace kronmod {
namespace {

using testing::lin;
using testing::quad;
using testing::var;

const Field Q = Field::rational();

TEST(InternalProduct, Examples) {
  // q = x^2 - yz + (a + d) xw with a = 1, d = 2.
  QuadForm q = quad(Q, {{"x2", 1}, {"yz", -1}, {"xw", 3}});
  EXPECT_EQ(internal_product(0, q), lin(Q, 2, 0, 0, 3));
  EXPECT_TRUE(internal_product(1, quad(Q, {{"x2", 1}})).is_zero());
  EXPECT_EQ(internal_product(3, quad(Q, {{"xw", 1}, {"yz", -1}})), var(Q, 0));
  EXPECT_THROW(internal_product(4, q), std::out_of_range);
}

// Oracle: central difference, exact for quadratics.
TEST(InternalProduct, MatchesCentralDifference) {
  for (const Field& f : {Q, Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 2);
    const Scalar two = f.from_int(2);
    for (int trial = 0; trial < 40; ++trial) {
      QuadForm q = QuadForm::product(s.lin_form(), s.lin_form()) + QuadForm::product(s.lin_form(), s.lin_form());
      auto v = testing::random_point(s);
      for (std::size_t i = 0; i < 4; ++i) {
        auto up = v, down = v;
        up[i] += f.one();
        down[i] -= f.one();
        Scalar diff = (testing::eval_monomials(q, up) - testing::eval_monomials(q, down)) / two;
        EXPECT_EQ(testing::eval(internal_product(i, q), v), diff);
      }
    }
  }
}

TEST(Wedge4, Examples) {
  EXPECT_EQ(wedge4(var(Q, 0), var(Q, 3), var(Q, 1), var(Q, 2)), Q.one());
  EXPECT_TRUE(wedge4(var(Q, 0), var(Q, 0), var(Q, 1), var(Q, 2)).is_zero());
  EXPECT_EQ(wedge4(var(Q, 0), var(Q, 1), var(Q, 2), var(Q, 3)), Q.one());
}

TEST(Wedge4, MatchesLeibniz) {
  Sampler s = testing::sampler(Q, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::array<LinForm, 4> l{s.lin_form(), s.lin_form(), s.lin_form(), s.lin_form()};
    std::vector<std::vector<Scalar>> rows(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rows[i].push_back(l[i][j]);
    EXPECT_EQ(wedge4(l[0], l[1], l[2], l[3]), testing::leibniz(rows));
  }
}

TEST(GramRank, Examples) {
  EXPECT_EQ(gram_rank(quad(Q, {{"x2", 1}})), 1u);
  EXPECT_EQ(gram_rank(quad(Q, {{"xw", 1}, {"yz", -1}})), 4u);
  EXPECT_EQ(gram_rank(quad(Q, {{"x2", 1}, {"yz", -1}})), 3u);
  EXPECT_EQ(gram_rank(QuadForm(Q)), 0u);
}

TEST(Gram, EvaluatesTheForm) {
  Sampler s = testing::sampler(Q, 4);
  for (int trial = 0; trial < 20; ++trial) {
    QuadForm q = QuadForm::product(s.lin_form(), s.lin_form()) + QuadForm::product(s.lin_form(), s.lin_form());
    auto v = testing::random_point(s);
    EXPECT_EQ(q.evaluate(v), testing::eval_monomials(q, v));
    EXPECT_EQ(QuadForm::from_gram(q.gram()), q);
  }
}

TEST(FactorQuadric, Examples) {
  auto [u, v] = factor_quadric(quad(Q, {{"x2", 1}}));
  EXPECT_EQ(QuadForm::product(u, v), quad(Q, {{"x2", 1}}));
  auto [a, b] = factor_quadric(quad(Q, {{"xy", 1}}));
  EXPECT_EQ(QuadForm::product(a, b), quad(Q, {{"xy", 1}}));
  EXPECT_THROW(factor_quadric(quad(Q, {{"x2", 1}, {"y2", 1}})), NeedsExtension);
  EXPECT_THROW(factor_quadric(quad(Q, {{"x2", 1}, {"yz", -1}})), std::invalid_argument);
  // x^2 + y^2 = (x + 5y)(x - 5y) mod 13, since 5^2 = -1.
  const Field f = Field::prime(13);
  auto [c, d] = factor_quadric(quad(f, {{"x2", 1}, {"y2", 1}}));
  EXPECT_EQ(QuadForm::product(c, d), quad(f, {{"x2", 1}, {"y2", 1}}));
}

TEST(FactorQuadric, RandomProducts) {
  for (const Field& f : {Q, Field::prime(1009)}) {
    Sampler s = testing::sampler(f, 5);
    for (int trial = 0; trial < 50; ++trial) {
      QuadForm q = QuadForm::product(s.lin_form(), s.lin_form());
      if (q.is_zero()) continue;
      auto [u, v] = factor_quadric(q);
      EXPECT_EQ(QuadForm::product(u, v), q);
    }
  }
}

TEST(CoordChange, Examples) {
  QuadForm cone = quad(Q, {{"x2", 1}, {"yz", -1}});
  EXPECT_EQ(apply_coord_change(CoordChange<4>::identity(Q), cone), cone);
  Matrix swap = Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(apply_coord_change(CoordChange<4>(swap), cone), cone);
  Matrix negate_z = Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(apply_coord_change(CoordChange<4>(negate_z), quad(Q, {{"x2", 1}, {"yz", 1}})), cone);
  EXPECT_THROW(CoordChange<4>(Matrix(Q, 4, 4)), std::invalid_argument);
}

TEST(CoordChange, SubstitutionAndComposition) {
  for (const Field& f : {Q, Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 6);
    for (int trial = 0; trial < 30; ++trial) {
      CoordChange<4> a = random_coord_change(s), b = random_coord_change(s);
      QuadForm q = QuadForm::product(s.lin_form(), s.lin_form()) + QuadForm::product(s.lin_form(), s.lin_form());
      LinForm l = s.lin_form();
      EXPECT_EQ(apply_coord_change(b, apply_coord_change(a, q)), apply_coord_change(a * b, q));
      EXPECT_EQ(apply_coord_change(b, apply_coord_change(a, l)), apply_coord_change(a * b, l));
      // q'(v) = q(M v).
      auto v = testing::random_point(s);
      std::vector<Scalar> mv = a.matrix().apply({v[0], v[1], v[2], v[3]});
      EXPECT_EQ(apply_coord_change(a, q).evaluate(v), q.evaluate({mv[0], mv[1], mv[2], mv[3]}));
      EXPECT_EQ(apply_coord_change(a.inverse(), apply_coord_change(a, q)), q);
    }
  }
}

TEST(Forms, Printing) {
  EXPECT_EQ(quad(Q, {{"xw", 1}, {"yz", -1}}).to_string(), "x*w - y*z");
  EXPECT_EQ(lin(Q, 2, 0, -1, 0).to_string(), "2*x - z");
  EXPECT_EQ(LinForm(Q).to_string(), "0");
}

}  // namespace
}  // namespace kronmod
