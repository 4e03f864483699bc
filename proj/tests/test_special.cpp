#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace crystalpoly;
using testutil::bfs_set;
using testutil::rank2;
using testutil::sl2;

TEST(Chebyshev, Values) {
  EXPECT_EQ(chebyshev(0, 17), 1);
  EXPECT_EQ(chebyshev(2, 2), 3);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(chebyshev(k, 2), k + 1);
  for (Int x = -3; x <= 3; ++x) EXPECT_EQ(chebyshev(2, x), x * x - 1);
  EXPECT_THROW(chebyshev(-1, 0), std::invalid_argument);
}

TEST(ASequence, Values) {
  for (Int c1 = 0; c1 <= 4; ++c1)
    for (Int c2 = 0; c2 <= 4; ++c2) {
      EXPECT_EQ(a_sequence(c1, c2, 0), 0);
      EXPECT_EQ(a_sequence(c1, c2, 1), 1);
      EXPECT_EQ(a_sequence(c1, c2, 2), c1);
      EXPECT_EQ(a_sequence(c1, c2, 3), c1 * c2 - 1);
      EXPECT_EQ(a_sequence(c1, c2, 4), c1 * (c1 * c2 - 2));
    }
  for (int l = 0; l < 12; ++l) EXPECT_EQ(a_sequence(2, 2, l), l);
  std::vector<Int> g2;
  for (int l = 0; l <= 6; ++l) g2.push_back(a_sequence(3, 1, l));
  EXPECT_EQ(g2, (std::vector<Int>{0, 1, 3, 2, 3, 1, 0}));
}

TEST(LMax, Table) {
  EXPECT_EQ(l_max(0, 0), 2);
  EXPECT_EQ(l_max(1, 1), 3);
  EXPECT_EQ(l_max(1, 2), 4);
  EXPECT_EQ(l_max(2, 1), 4);
  EXPECT_EQ(l_max(1, 3), 6);
  EXPECT_EQ(l_max(3, 1), 6);
  EXPECT_FALSE(l_max(2, 2));
  EXPECT_FALSE(l_max(1, 4));
  for (auto [c1, c2] : std::vector<std::pair<Int, Int>>{{0, 0}, {1, 1}, {2, 1}, {3, 1}}) {
    const int lm = *l_max(c1, c2);
    EXPECT_EQ(a_sequence(c1, c2, lm), 0);
    for (int l = 1; l < lm; ++l) EXPECT_GT(a_sequence(c1, c2, l), 0);
  }
}

TEST(Rank2System, AffineForms) {
  auto fs = rank2_system(2, 2, Weight{{1, 1}}, 5);
  EXPECT_EQ(fs.support_bound, 5);
  for (int l = 1; l < 5; ++l) {
    LinearForm f;
    f.set(l, l);
    f.set(l + 1, -(l - 1));
    EXPECT_TRUE(fs.contains(f)) << f.str();
    LinearForm g(Rational(1));
    g.set(l, l + 1);
    g.set(l + 1, -l);
    EXPECT_TRUE(fs.contains(g)) << g.str();
  }
  LinearForm top(Rational(1));
  top.set(1, -1);
  EXPECT_TRUE(fs.contains(top));
  EXPECT_TRUE(member(fs, ZVector{{1, 1}, {2, 2}}));
  EXPECT_THROW(rank2_system(2, 2, std::nullopt), std::invalid_argument);
  EXPECT_THROW(rank2_system(1, 1, Weight{{1}}), std::invalid_argument);
}

TEST(Rank2System, A2Counts) {
  auto fs = rank2_system(1, 1, Weight{{1, 0}});
  EXPECT_EQ(enumerate_lattice_points(fs, 2).size(), 3u);
  auto zero = rank2_system(1, 1, Weight::zero(2));
  EXPECT_EQ(enumerate_lattice_points(zero, 6).size(), 1u);
}

TEST(Rank2System, MatchesBfs) {
  const Sequence s({1, 2}, 2);
  for (auto [c1, c2] : std::vector<std::pair<Int, Int>>{{0, 0}, {1, 1}, {2, 1}, {1, 2}, {1, 3}, {3, 1}}) {
    EXPECT_EQ(enumerate_lattice_points(rank2_system(c1, c2, std::nullopt), 6),
              bfs_set(rank2(c1, c2), s, std::nullopt, 6));
    for (const auto& lam : testutil::dominant_box(2, 1))
      EXPECT_EQ(enumerate_lattice_points(rank2_system(c1, c2, lam), 6),
                bfs_set(rank2(c1, c2), s, lam, 6));
  }
}

TEST(AnSystem, SmallCases) {
  auto one = an_system(1, Weight{{3}});
  EXPECT_EQ(enumerate_lattice_points(one, 10).size(), 4u);
  auto a3 = an_system(3, Weight{{0, 1, 0}});
  EXPECT_EQ(a3.support_bound, 9);
  EXPECT_EQ(enumerate_lattice_points(a3, 8).size(), 6u);
  EXPECT_EQ(an_position(3, 2, 1), 4);
  EXPECT_THROW(an_system(0, std::nullopt), std::invalid_argument);
}

TEST(AnSystem, N2MatchesRank2) {
  for (const auto& lam : testutil::dominant_box(2, 2)) {
    auto an = enumerate_lattice_points(an_system(2, lam), 8);
    auto r2 = enumerate_lattice_points(rank2_system(1, 1, lam), 8);
    EXPECT_EQ(an, r2);
  }
}

TEST(AnSystem, MatchesBfs) {
  const auto a3 = builtin_type("a3");
  for (const auto& lam : testutil::dominant_box(3, 1))
    EXPECT_EQ(enumerate_lattice_points(an_system(3, lam), 6),
              bfs_set(a3.cartan, a3.iota, lam, 6));
}

TEST(Truncation, ReducedWords) {
  auto a2 = builtin_type("a2");
  auto r = truncation_check(a2.cartan, *a2.longest_word, 6);
  EXPECT_TRUE(r.ok());
  EXPECT_LE(r.max_support, 3);
  auto a3 = builtin_type("a3");
  EXPECT_TRUE(truncation_check(a3.cartan, *a3.longest_word, 6).ok());
}

TEST(Truncation, RepeatedLetter) {
  auto r = truncation_check(sl2(), ReducedWord{{1}}, 8);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.max_support, 1);
}

TEST(Truncation, NonReducedWordIsFlagged) {
  // 1 2 read as a whole period is too short for A_2: support leaks past 2.
  auto r = truncation_check(rank2(1, 1), ReducedWord{{1, 2}}, 4);
  EXPECT_FALSE(r.ok());
}
