#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace crystalpoly {

/// Edge (src, i, dst) meaning f_i(src) = dst.
struct Edge {
  std::size_t src = 0;
  int label = 0;
  std::size_t dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Nodes are stored in BFS discovery order; node 0 is the root.
template <class Node>
struct CrystalGraph {
  std::vector<Node> nodes;
  std::vector<int> depth;
  std::vector<Edge> edges;
  std::size_t root = 0;

  std::size_t size() const { return nodes.size(); }

  std::optional<std::size_t> find(const Node& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::set<Node> node_set() const { return {nodes.begin(), nodes.end()}; }

  /// Inserts if absent; returns (position, inserted).
  std::pair<std::size_t, bool> insert(Node n, int d) {
    auto [it, inserted] = index_.try_emplace(n, nodes.size());
    if (inserted) {
      nodes.push_back(std::move(n));
      depth.push_back(d);
    }
    return {it->second, inserted};
  }

 private:
  std::map<Node, std::size_t> index_;
};

/// Closure of `seed` under step(node, i) for i in 1..labels, up to `depth`
/// applications. step returns nullopt for the absorbing element 0.
///
/// With jobs > 1 the successors of each frontier layer are computed in
/// parallel; insertion stays in frontier order so the result does not depend
/// on scheduling.
template <class Node, class Step>
CrystalGraph<Node> bfs_closure(const Node& seed, int labels, int depth,
                               Step step, int jobs = 1) {
  CrystalGraph<Node> graph;
  graph.insert(seed, 0);
  std::vector<std::size_t> frontier{0};

  using Succ = std::vector<std::optional<Node>>;
  auto expand = [&](std::size_t node) {
    Succ out;
    out.reserve(static_cast<std::size_t>(labels));
    for (int i = 1; i <= labels; ++i) out.push_back(step(graph.nodes[node], i));
    return out;
  };

  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Succ> succ(frontier.size());
    if (jobs <= 1 || frontier.size() < 64) {
      for (std::size_t n = 0; n < frontier.size(); ++n)
        succ[n] = expand(frontier[n]);
    } else {
      const std::size_t chunks = static_cast<std::size_t>(jobs);
      const std::size_t per = (frontier.size() + chunks - 1) / chunks;
      std::vector<std::future<void>> tasks;
      for (std::size_t start = 0; start < frontier.size(); start += per) {
        const std::size_t stop = std::min(frontier.size(), start + per);
        tasks.push_back(std::async(std::launch::async, [&, start, stop] {
          for (std::size_t n = start; n < stop; ++n)
            succ[n] = expand(frontier[n]);
        }));
      }
      for (auto& t : tasks) t.get();
    }

    std::vector<std::size_t> next;
    for (std::size_t n = 0; n < frontier.size(); ++n) {
      for (int i = 1; i <= labels; ++i) {
        auto& target = succ[n][static_cast<std::size_t>(i - 1)];
        if (!target) continue;
        auto [pos, inserted] = graph.insert(std::move(*target), d + 1);
        graph.edges.push_back(Edge{frontier[n], i, pos});
        if (inserted) next.push_back(pos);
      }
    }
    frontier = std::move(next);
  }
  return graph;
}

}  // namespace crystalpoly
