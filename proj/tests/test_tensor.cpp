#include <gtest/gtest.h>

#include "crystalpoly/tensor.hpp"
#include "helpers.hpp"

using namespace crystalpoly;
using testutil::rank2;
using testutil::sl2;

TEST(Tensor, SingleLetter) {
  TensorCrystal c(sl2());
  auto b = make_tensor({1}, {0});
  EXPECT_EQ(c.epsilon(b, 1), ExtInt(0));
  EXPECT_EQ(c.phi(b, 1), ExtInt(0));
  auto x = make_tensor({1}, {3});
  EXPECT_EQ(c.epsilon(x, 1), ExtInt(-3));
  EXPECT_EQ(c.phi(x, 1), ExtInt(3));
  EXPECT_EQ(c.weight(x).pairing(1), 6);
  EXPECT_EQ(*c.e(b, 1), make_tensor({1}, {1}));
  EXPECT_EQ(*c.f(b, 1), make_tensor({1}, {-1}));
}

TEST(Tensor, OtherIndexIsNegativeInfinity) {
  TensorCrystal c(rank2(1, 1));
  auto b = make_tensor({1}, {2});
  EXPECT_TRUE(c.epsilon(b, 2).is_neg_inf());
  EXPECT_TRUE(c.phi(b, 2).is_neg_inf());
  EXPECT_FALSE(c.f(b, 2));
  EXPECT_FALSE(c.e(b, 2));
  EXPECT_EQ(c.weight(b).coeffs, (std::vector<Int>{4, -2}));
}

TEST(Tensor, TwoFactorFold) {
  TensorCrystal c(sl2());
  auto b = make_tensor({1, 1}, {-1, 0});
  const auto d = c.eps_phi_wt(b, 1);
  EXPECT_EQ(d.epsilon, ExtInt(2));
  EXPECT_EQ(d.phi, ExtInt(0));
  EXPECT_EQ(d.weight, -2);
  EXPECT_EQ(d.phi, d.epsilon + d.weight);
}

TEST(Tensor, UnitFactor) {
  TensorCrystal c(sl2());
  TensorElem r{{}, Weight{{2}}};
  EXPECT_EQ(c.epsilon(r, 1), ExtInt(-2));
  EXPECT_EQ(c.phi(r, 1), ExtInt(0));
  EXPECT_FALSE(c.f(r, 1));
  EXPECT_FALSE(c.e(r, 1));
}

TEST(Tensor, RightmostFactorSelected) {
  TensorCrystal c(rank2(1, 1));
  auto b = make_tensor({1, 2, 1}, {0, 0, 0});
  EXPECT_EQ(*c.f(b, 1), make_tensor({1, 2, 1}, {0, 0, -1}));
  EXPECT_EQ(*c.e(*c.f(b, 1), 1), b);
}

TEST(Tensor, EmptyTensorIsKilled) {
  TensorCrystal c(sl2());
  EXPECT_FALSE(c.f(TensorElem{}, 1));
}

TEST(Tensor, Sl2BinfTimesUnitIsFinite) {
  TensorCrystal c(sl2());
  // u_inf as a string of zero letters, tensored with r_2.
  auto seed = make_tensor({1, 1, 1, 1}, {0, 0, 0, 0}, Weight{{2}});
  auto g = connected_component(c, seed, 6);
  EXPECT_EQ(g.size(), 3u);
  auto two = *c.f(*c.f(seed, 1), 1);
  EXPECT_FALSE(c.f(two, 1));
}

TEST(Tensor, Sl2BinfChain) {
  TensorCrystal c(sl2());
  auto seed = make_tensor({1, 1, 1}, {0, 0, 0});
  auto g = connected_component(c, seed, 5);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.edges.size(), 5u);
  EXPECT_EQ(connected_component(c, seed, 0).size(), 1u);
}

TEST(Tensor, BracketingsAgree) {
  TensorCrystal left(rank2(1, 2), Bracketing::Left);
  TensorCrystal right(rank2(1, 2), Bracketing::Right);
  auto b = make_tensor({1, 2, 1, 2, 1}, {1, -2, 0, 3, -1}, Weight{{1, 0}});
  for (int i = 1; i <= 2; ++i) {
    EXPECT_EQ(left.f(b, i), right.f(b, i));
    EXPECT_EQ(left.e(b, i), right.e(b, i));
    EXPECT_EQ(left.epsilon(b, i), right.epsilon(b, i));
    EXPECT_EQ(left.phi(b, i), right.phi(b, i));
  }
}

TEST(Tensor, AxiomsOnComponent) {
  TensorCrystal c(rank2(1, 1));
  auto seed = make_tensor({1, 2, 1, 2, 1, 2}, {0, 0, 0, 0, 0, 0}, Weight{{1, 1}});
  auto g = connected_component(c, seed, 8);
  EXPECT_EQ(g.size(), 8u);  // dim V(rho) for A_2
  EXPECT_TRUE(check_axioms(c, g.nodes).empty());
}

TEST(Tensor, Describe) {
  TensorCrystal c(sl2());
  auto b = make_tensor({1}, {-2}, Weight{{1}});
  EXPECT_NE(c.describe(b).find("(-2)_1"), std::string::npos);
}
