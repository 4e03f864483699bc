#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace crystalpoly;
using testutil::rank2;
using testutil::sl2;

namespace {

const Sequence kOnes = Sequence({1}, 1);
const Sequence kEx37 = Sequence::parse("1 2 3 2 1 2", 3);

}  // namespace

TEST(ZVector, SparseStorage) {
  ZVector x{{1, 2}, {4, 0}, {3, -1}};
  EXPECT_EQ(x.coords().size(), 2u);
  EXPECT_EQ(x.at(4), 0);
  EXPECT_EQ(x.max_position(), 3);
  x.add(3, 1);
  EXPECT_EQ(x.max_position(), 1);
  EXPECT_TRUE(ZVector{}.is_zero());
  EXPECT_EQ(ZVector::from_dense({1, 0, 2}), (ZVector{{1, 1}, {3, 2}}));
  EXPECT_EQ(x.dense(3), (std::vector<Int>{2, 0, 0}));
  EXPECT_THROW(x.set(0, 1), std::out_of_range);
  EXPECT_EQ(ZVector{}.str(), "0");
}

TEST(ZCrystal, Sigma) {
  ZCrystal s(sl2(), kOnes);
  ZVector x{{1, 1}};
  EXPECT_EQ(s.sigma(x, 1), 1);
  EXPECT_EQ(s.sigma(x, 2), 0);
  ZCrystal a3(builtin_type("a3").cartan, kEx37);
  EXPECT_EQ(a3.sigma(x, 1), 1);
  EXPECT_EQ(a3.sigma(x, 5), 0);
  for (int k = 1; k < 10; ++k) EXPECT_EQ(a3.sigma(ZVector{}, k), 0);
}

TEST(ZCrystal, SigmaZero) {
  ZCrystal c(sl2(), kOnes, Weight{{2}});
  EXPECT_EQ(c.sigma0(ZVector{}, 1), -2);
  EXPECT_EQ(c.sigma0(ZVector{{1, 1}}, 1), 0);
  ZCrystal z(rank2(1, 1), Sequence({1, 2}, 2), Weight::zero(2));
  EXPECT_EQ(z.sigma0(ZVector{}, 2), 0);
  ZCrystal binf(sl2(), kOnes);
  EXPECT_THROW(binf.sigma0(ZVector{}, 1), std::logic_error);
}

TEST(ZCrystal, MSet) {
  ZCrystal a3(builtin_type("a3").cartan, kEx37);
  auto m = a3.m_set(ZVector{}, 3);
  EXPECT_EQ(m.sigma, 0);
  EXPECT_EQ(m.min_pos, 3);
  EXPECT_FALSE(m.max_pos);

  ZCrystal s(sl2(), kOnes);
  auto n = s.m_set(ZVector{{1, 1}}, 1);
  EXPECT_EQ(n.sigma, 1);
  EXPECT_EQ(n.min_pos, 1);
  EXPECT_EQ(n.max_pos, 1);

  ZCrystal aff(rank2(2, 2), Sequence({1, 2}, 2));
  auto p = aff.m_set(ZVector{{1, 2}, {2, 1}}, 1);
  EXPECT_EQ(aff.sigma(ZVector{{1, 2}, {2, 1}}, 1), 0);
  EXPECT_EQ(p.sigma, 0);
  EXPECT_FALSE(p.max_pos);
}

TEST(ZCrystal, Sl2Actions) {
  ZCrystal bl(sl2(), kOnes, Weight{{2}});
  auto x = *bl.f(*bl.f(ZVector{}, 1), 1);
  EXPECT_EQ(x, (ZVector{{1, 2}}));
  EXPECT_FALSE(bl.f(x, 1));
  EXPECT_EQ(*bl.e(x, 1), (ZVector{{1, 1}}));

  ZCrystal binf(sl2(), kOnes);
  auto y = *binf.f(*binf.f(*binf.f(ZVector{}, 1), 1), 1);
  EXPECT_EQ(y, (ZVector{{1, 3}}));
  EXPECT_EQ(binf.weight(y).pairing(1), -6);

  ZCrystal zero(rank2(1, 1), Sequence({1, 2}, 2), Weight::zero(2));
  EXPECT_FALSE(zero.f(ZVector{}, 1));
  EXPECT_FALSE(zero.f(ZVector{}, 2));
  EXPECT_FALSE(binf.e(ZVector{}, 1));
  EXPECT_FALSE(bl.e(ZVector{}, 1));
}

TEST(ZCrystal, HighestElementData) {
  ZCrystal c(rank2(1, 1), Sequence({1, 2}, 2), Weight{{1, 2}});
  auto d = c.wt_eps_phi(ZVector{});
  EXPECT_EQ(d.wt.coeffs, (std::vector<Int>{1, 2}));
  EXPECT_EQ(d.epsilon, (std::vector<Int>{0, 0}));
  EXPECT_EQ(d.phi, (std::vector<Int>{1, 2}));
  ZCrystal z(rank2(1, 1), Sequence({1, 2}, 2), Weight::zero(2));
  auto e = z.wt_eps_phi(ZVector{});
  EXPECT_EQ(e.phi, (std::vector<Int>{0, 0}));
}

TEST(ZCrystal, Sl2Chains) {
  for (Int m = 0; m <= 5; ++m) {
    ZCrystal c(sl2(), kOnes, Weight{{m}});
    auto g = c.bfs(10);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(m + 1));
    EXPECT_EQ(g.edges.size(), static_cast<std::size_t>(m));
  }
  EXPECT_EQ(ZCrystal(sl2(), kOnes).bfs(10).size(), 11u);
}

TEST(ZCrystal, A2FundamentalWeight) {
  ZCrystal c(rank2(1, 1), Sequence({1, 2}, 2), Weight{{1, 0}});
  auto g = c.bfs(3);
  std::set<ZVector> expect{ZVector{}, ZVector{{1, 1}}, ZVector{{1, 1}, {2, 1}}};
  EXPECT_EQ(g.node_set(), expect);
}

TEST(ZCrystal, KnownCounts) {
  const Sequence s12({1, 2}, 2);
  EXPECT_EQ(ZCrystal(rank2(1, 1), s12).bfs(7).size(), 70u);
  EXPECT_EQ(ZCrystal(rank2(1, 1), s12, Weight{{1, 1}}).bfs(7).size(), 8u);
  EXPECT_EQ(ZCrystal(rank2(2, 1), s12).bfs(7).size(), 95u);
  EXPECT_EQ(ZCrystal(rank2(2, 1), s12, Weight{{1, 1}}).bfs(7).size(), 16u);
  EXPECT_EQ(ZCrystal(rank2(1, 3), s12).bfs(7).size(), 116u);
  EXPECT_EQ(ZCrystal(rank2(1, 3), s12, Weight{{1, 1}}).bfs(7).size(), 29u);
  EXPECT_EQ(ZCrystal(rank2(1, 3), s12, Weight{{1, 0}}).bfs(7).size(), 11u);
  const auto a3 = builtin_type("a3");
  EXPECT_EQ(ZCrystal(a3.cartan, a3.iota, Weight{{0, 1, 0}}).bfs(6).size(), 6u);
}

TEST(ZCrystal, DepthZeroIsSingleNode) {
  auto g = ZCrystal(rank2(1, 1), Sequence({1, 2}, 2)).bfs(0);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_THROW(ZCrystal(sl2(), kOnes).bfs(-1), std::invalid_argument);
}

TEST(ZCrystal, ParallelBfsIsDeterministic) {
  ZCrystal c(rank2(1, 3), Sequence({1, 2}, 2));
  auto a = c.bfs(8, 1);
  auto b = c.bfs(8, 4);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(a.edges, b.edges);
}

TEST(ZCrystal, RoundTripAndAxioms) {
  const auto b2 = builtin_type("b2");
  for (auto lambda : {std::optional<Weight>{}, std::optional<Weight>{Weight{{1, 1}}}}) {
    ZCrystal c(b2.cartan, b2.iota, lambda);
    auto g = c.bfs(6);
    for (const auto& x : g.nodes)
      for (int i = 1; i <= 2; ++i)
        if (auto y = c.f(x, i)) {
          EXPECT_EQ(*c.e(*y, i), x);
        }
    AxiomOptions opt;
    opt.epsilon_is_string_length = true;
    opt.phi_is_string_length = lambda.has_value();
    EXPECT_TRUE(check_axioms(c, g.nodes, opt).empty());
  }
}

TEST(ZCrystal, TensorBridge) {
  const auto a2 = builtin_type("a2");
  ZCrystal c(a2.cartan, a2.iota, Weight{{1, 1}});
  ZVector x{{1, 1}, {2, 2}};
  auto t = c.to_tensor(x, 4);
  ASSERT_EQ(t.letters.size(), 4u);
  EXPECT_EQ(t.letters[2].value, -2);  // position 2
  EXPECT_EQ(t.letters[3].index, 1);   // position 1, i_1 = 1
  EXPECT_EQ(c.from_tensor(t), x);
  EXPECT_THROW(c.to_tensor(x, 1), std::out_of_range);
}

TEST(ZCrystal, RejectsWeightRankMismatch) {
  EXPECT_THROW(ZCrystal(sl2(), kOnes, Weight{{1, 1}}), std::invalid_argument);
}
