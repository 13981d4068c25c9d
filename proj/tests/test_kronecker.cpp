#include <gtest/gtest.h>

#include "helpers.hpp"

namespace kronmod {
namespace {

using testing::lin;
using testing::module;
using testing::quad;
using testing::var;

const Field Q = Field::rational();

Scalar det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

TEST(Det, Examples) {
  KModule phi = module(lin(Q, 1, 0, 0, 1), var(Q, 1), var(Q, 2), lin(Q, 1, 0, 0, 2));
  EXPECT_EQ(det_semiinvariant(phi), quad(Q, {{"x2", 1}, {"yz", -1}, {"xw", 3}, {"w2", 2}}));
  EXPECT_EQ(det_semiinvariant(nu1_module(Q)), quad(Q, {{"xw", 1}, {"yz", -1}}));
  EXPECT_TRUE(det_semiinvariant(module(var(Q, 0), LinForm(Q), LinForm(Q), LinForm(Q))).is_zero());
}

TEST(Epsilon, Examples) {
  for (long long b : {0, 5})
    for (long long c : {-2, 7}) {
      KModule phi = normal_form_module(Q.one(), Q.one(), Q.from_int(b), Q.from_int(c), Q.from_int(3));
      EXPECT_EQ(epsilon(phi), Q.from_int(2));
    }
  EXPECT_EQ(epsilon(nu1_module(Q)), Q.one());
  EXPECT_EQ(epsilon(nu2_module(Q)), -Q.one());
  EXPECT_TRUE(epsilon(module(var(Q, 0), var(Q, 1), var(Q, 2), var(Q, 0))).is_zero());
}

TEST(Rho, Examples) {
  KModule nf = normal_form_module(Q.one(), Q.one(), Q.zero(), Q.zero(), Q.from_int(3));
  EXPECT_EQ(rho(nf), Q.from_int(4));
  EXPECT_EQ(rho(nu1_module(Q)), Q.one());
  EXPECT_TRUE(rho(module(var(Q, 0), LinForm(Q), LinForm(Q), LinForm(Q))).is_zero());
}

// Oracle: rho = 16 det(Gram(det phi)), expanded by Leibniz.
TEST(Rho, MatchesGramDeterminant) {
  for (const Field& f : {Q, Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 10);
    for (int trial = 0; trial < 100; ++trial) {
      KModule phi = random_module(s);
      EXPECT_EQ(rho(phi), testing::leibniz(det_semiinvariant(phi).gram()) * f.from_int(16));
      EXPECT_EQ(epsilon(phi) * epsilon(phi), rho(phi));
    }
  }
}

// Oracle: the coefficient matrix of (phi11, phi22, phi12, phi21), expanded by Leibniz.
TEST(Epsilon, MatchesLeibniz) {
  Sampler s = testing::sampler(Q, 11);
  for (int trial = 0; trial < 100; ++trial) {
    KModule phi = random_module(s);
    std::vector<std::vector<Scalar>> rows;
    for (const LinForm* l : {&phi(0, 0), &phi(1, 1), &phi(0, 1), &phi(1, 0)})
      rows.push_back({(*l)[0], (*l)[1], (*l)[2], (*l)[3]});
    EXPECT_EQ(epsilon(phi), testing::leibniz(rows));
  }
}

TEST(Act, IdentityAndScaling) {
  KModule phi = nu1_module(Q);
  EXPECT_EQ(act(GroupElem::identity(Q), phi), phi);
  Matrix two = Matrix::identity(Q, 2) * Q.from_int(2);
  KModule moved = act(GroupElem(two, Matrix::identity(Q, 2)), phi);
  EXPECT_EQ(det_semiinvariant(moved), det_semiinvariant(phi) * (Q.one() / Q.from_int(4)));
  EXPECT_THROW(GroupElem(Matrix(Q, 2, 2), Matrix::identity(Q, 2)), std::invalid_argument);
}

TEST(Act, IsAGroupAction) {
  for (const Field& f : {Q, Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 12);
    for (int trial = 0; trial < 50; ++trial) {
      GroupElem a = random_group_elem(s), b = random_group_elem(s);
      KModule phi = random_module(s);
      EXPECT_EQ(act(a * b, phi), act(a, act(b, phi)));
      EXPECT_EQ(act(a.inverse(), act(a, phi)), phi);
    }
  }
}

TEST(TransformationLaws, Group) {
  for (const Field& f : {Q, Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 13);
    for (int trial = 0; trial < 100; ++trial) {
      GroupElem gh = random_group_elem(s);
      KModule phi = random_module(s);
      Scalar chi = det2(gh.h()) / det2(gh.g());
      EXPECT_EQ(det_semiinvariant(act(gh, phi)), det_semiinvariant(phi) * chi);
      EXPECT_EQ(epsilon(act(gh, phi)), epsilon(phi) * chi * chi);
    }
  }
}

TEST(TransformationLaws, Coordinates) {
  for (const Field& f : {Q, Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 14);
    for (int trial = 0; trial < 100; ++trial) {
      CoordChange<4> u = random_coord_change(s);
      KModule phi = random_module(s);
      KModule moved = apply_coord_change(u, phi);
      EXPECT_EQ(det_semiinvariant(moved), apply_coord_change(u, det_semiinvariant(phi)));
      EXPECT_EQ(epsilon(moved), epsilon(phi) * u.determinant());
      EXPECT_EQ(rho(moved), rho(phi) * u.determinant() * u.determinant());
    }
  }
}

TEST(Project, Examples) {
  KModule nf = normal_form_module(Q.one(), Q.from_int(4), Q.from_int(5), Q.from_int(6), Q.from_int(7));
  TernaryModule cone(TernaryLinForm::variable(Q, 0), TernaryLinForm::variable(Q, 1), TernaryLinForm::variable(Q, 2),
                     TernaryLinForm::variable(Q, 0));
  EXPECT_EQ(project_module(nf), cone);
  KModule diag = module(var(Q, 0), LinForm(Q), LinForm(Q), var(Q, 0));
  EXPECT_TRUE(project_module(diag, {1, 2, 3}).is_zero());
  TernaryModule dropped = project_module(nu1_module(Q));
  TernaryQuadForm minus_yz(Q);
  minus_yz.coeff(1, 2) = -Q.one();
  EXPECT_EQ(det_semiinvariant(dropped), minus_yz);
  EXPECT_EQ(project_module(embed_module(cone)), cone);
}

TEST(InjectiveOnQuadric, Examples) {
  EXPECT_FALSE(is_injective_on_quadric(nu1_module(Q)));
  EXPECT_TRUE(is_injective_on_quadric(normal_form_module(Q.one(), Q.zero(), Q.zero(), Q.zero(), Q.zero())));
  EXPECT_FALSE(is_injective_on_quadric(KModule(Q)));
  EXPECT_FALSE(is_injective_on_quadric(nu2_module(Q) * Q.from_int(3)));
}

TEST(ClassEqual, Examples) {
  Sampler s = testing::sampler(Q, 15);
  KModule phi = random_semistable_module(s);
  EXPECT_TRUE(class_equal(phi, act(random_group_elem(s), phi)));
  EXPECT_FALSE(class_equal(nu1_module(Q), nu2_module(Q)));
  EXPECT_TRUE(class_equal(phi, phi * Q.from_int(2)));
}

}  // namespace
}  // namespace kronmod
