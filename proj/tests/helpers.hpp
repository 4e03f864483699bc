#pragma once

#include <optional>
#include <set>
#include <vector>

#include "crystalpoly/crystalpoly.hpp"

namespace testutil {

using namespace crystalpoly;

inline CartanData sl2() { return CartanData(std::vector<std::vector<Int>>{{2}}); }

inline CartanData rank2(Int c1, Int c2) { return CartanData({{2, -c1}, {-c2, 2}}); }

inline Weight w(std::vector<Int> c) { return Weight{std::move(c)}; }

inline std::set<ZVector> bfs_set(const CartanData& c, const Sequence& s,
                                 std::optional<Weight> lambda, int depth) {
  return ZCrystal(c, s, std::move(lambda)).bfs(depth).node_set();
}

/// Nodes of BFS with total <= depth. BFS depth and coordinate total agree, so
/// this only matters for filtering larger enumerations.
inline std::set<ZVector> up_to_total(const std::set<ZVector>& in, Int depth) {
  std::set<ZVector> out;
  for (const auto& x : in)
    if (x.total() <= depth) out.insert(x);
  return out;
}

/// Every dominant weight of rank n with entries in 0..max.
inline std::vector<Weight> dominant_box(int n, Int max) {
  std::vector<Weight> out{Weight::zero(n)};
  for (int i = 1; i <= n; ++i) {
    std::vector<Weight> next;
    for (const auto& base : out)
      for (Int v = 0; v <= max; ++v) {
        Weight x = base;
        x.pairing(i) = v;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace testutil
