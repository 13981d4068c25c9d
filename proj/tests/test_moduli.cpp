#include <gtest/gtest.h>

#include "helpers.hpp"

namespace kronmod {
namespace {

using testing::module;
using testing::quad;
using testing::var;

const Field Q = Field::rational();

TEST(Resultant, Examples) {
  QuadForm display = quad(Q, {{"x2", 1}, {"yz", -1}, {"xw", 4}, {"w2", 3}});
  EXPECT_EQ(resultant(display), Q.from_int(4));
  EXPECT_EQ(resultant(quad(Q, {{"xw", 1}, {"yz", -1}})), Q.one());
  EXPECT_TRUE(resultant(quad(Q, {{"x2", 1}})).is_zero());
}

// Oracle: Leibniz on the coefficient matrix of the four partial derivatives.
TEST(Resultant, MatchesDerivativeDeterminant) {
  Sampler s = testing::sampler(Q, 40);
  for (int trial = 0; trial < 50; ++trial) {
    QuadForm q = QuadForm::product(s.lin_form(), s.lin_form()) + QuadForm::product(s.lin_form(), s.lin_form());
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < 4; ++i) {
      LinForm d = internal_product(i, q);
      rows.push_back({d[0], d[1], d[2], d[3]});
    }
    EXPECT_EQ(resultant(q), testing::leibniz(rows));
  }
}

TEST(WPoint, Canonicalization) {
  QuadForm q = quad(Q, {{"xw", 2}, {"yz", -2}});
  WPoint p(q, Q.from_int(4));
  EXPECT_EQ(p, WPoint(quad(Q, {{"xw", 1}, {"yz", -1}}), Q.one()));
  EXPECT_EQ(WPoint(q * Q.from_int(-1), Q.from_int(4)), p);
  EXPECT_EQ(WPoint(QuadForm(Q), Q.from_int(12)), WPoint(QuadForm(Q), Q.from_int(3)));
  EXPECT_THROW(WPoint(QuadForm(Q), Q.zero()), std::invalid_argument);
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta(nu1_module(Q)), WPoint(quad(Q, {{"xw", 1}, {"yz", -1}}), Q.one()));
  EXPECT_EQ(eta(module(var(Q, 0), var(Q, 2), var(Q, 1), var(Q, 3))),
            WPoint(quad(Q, {{"xw", 1}, {"yz", -1}}), -Q.one()));
  EXPECT_THROW(eta(KModule(Q)), std::invalid_argument);
}

TEST(Eta, ConstantOnOrbitsAndOnTheHypersurface) {
  for (const Field& f : {Q, Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 41);
    for (int trial = 0; trial < 100; ++trial) {
      KModule phi = random_semistable_module(s);
      WPoint p = eta(phi);
      EXPECT_TRUE(on_hypersurface(p));
      EXPECT_EQ(eta(act(random_group_elem(s), phi)), p);
    }
  }
}

TEST(OnHypersurface, Examples) {
  QuadForm segre = quad(Q, {{"xw", 1}, {"yz", -1}});
  EXPECT_TRUE(on_hypersurface(WPoint(segre, Q.one())));
  EXPECT_FALSE(on_hypersurface(WPoint(segre, Q.zero())));
}

TEST(Nu, Points) {
  QuadForm segre = quad(Q, {{"xw", 1}, {"yz", -1}});
  EXPECT_EQ(nu1(Q), WPoint(segre, Q.one()));
  EXPECT_EQ(nu2(Q), WPoint(segre, -Q.one()));
  EXPECT_NE(nu1(Q), nu2(Q));
  EXPECT_EQ(eta(nu1_module(Q)), nu1(Q));
  EXPECT_EQ(eta(nu2_module(Q)), nu2(Q));
}

TEST(DetFiber, Examples) {
  Fiber two = det_fiber(quad(Q, {{"xw", 1}, {"yz", -1}}));
  ASSERT_EQ(two.points.size(), 2u);
  EXPECT_EQ(two.points[0], nu1(Q));
  EXPECT_EQ(two.points[1], nu2(Q));

  Fiber branch = det_fiber(quad(Q, {{"x2", 1}}));
  ASSERT_EQ(branch.points.size(), 1u);
  EXPECT_EQ(branch.points[0], WPoint(quad(Q, {{"x2", 1}}), Q.zero()));

  Fiber none = det_fiber(quad(Q, {{"x2", 1}, {"yz", -1}, {"w2", 2}}));
  EXPECT_EQ(resultant(quad(Q, {{"x2", 1}, {"yz", -1}, {"w2", 2}})), Q.from_int(-8));
  EXPECT_TRUE(none.needs_extension);
  EXPECT_TRUE(none.points.empty());
  EXPECT_THROW(det_fiber(QuadForm(Q)), std::invalid_argument);
}

TEST(EtaInverse, Examples) {
  KModule back = eta_inverse(nu1(Q));
  EXPECT_EQ(eta(back), nu1(Q));
  EXPECT_TRUE(class_equal(back, nu1_module(Q)));
  EXPECT_EQ(eta_inverse(WPoint(quad(Q, {{"x2", 1}}), Q.zero())),
            module(var(Q, 0), LinForm(Q), LinForm(Q), var(Q, 0)));
  EXPECT_THROW(eta_inverse(WPoint(quad(Q, {{"xw", 1}, {"yz", -1}}), Q.from_int(2))), std::invalid_argument);
}

TEST(EtaInverse, RoundTripOverFiniteFields) {
  for (const Field& f : {Field::prime(1009), Field::prime(10007)}) {
    Sampler s = testing::sampler(f, 42);
    for (int trial = 0; trial < 200; ++trial) {
      KModule phi = random_stable_module(s);
      WPoint p = eta(phi);
      KModule back = eta_inverse(p, {static_cast<std::uint64_t>(trial), 10'000});
      ASSERT_EQ(eta(back), p);
    }
  }
}

TEST(EtaInverse, ReducibleQuadricsGiveDiagonalModules) {
  Sampler s = testing::sampler(Q, 43);
  for (int trial = 0; trial < 50; ++trial) {
    LinForm u = s.lin_form(), v = s.lin_form();
    if (u.is_zero() || v.is_zero()) continue;
    WPoint p = eta(module(u, LinForm(Q), LinForm(Q), v));
    KModule back = eta_inverse(p);
    EXPECT_EQ(eta(back), p);
    EXPECT_TRUE(back(0, 1).is_zero() && back(1, 0).is_zero());
  }
}

}  // namespace
}  // namespace kronmod
