#pragma once

// Closed-form realizations: the rank 2 inequality systems built from
// Chebyshev coefficients, the A_n system for iota = ... n ... 2 1, and the
// finite-type support predicates for iota starting with a reduced longest
// word.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/polyhedral.hpp"
#include "crystalpoly/zcrystal.hpp"

namespace crystalpoly {

/// P_k(X) from sum_k P_k z^k = 1 / (1 - X z + z^2).
inline Int chebyshev(int k, Int x) {
  if (k < 0) throw std::invalid_argument("chebyshev: k must be >= 0");
  Int prev = 1;
  if (k == 0) return prev;
  Int cur = x;
  for (int n = 2; n <= k; ++n) {
    const Int next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// a_0 = 0, a_1 = 1, a_2k = c1 P_{k-1}(X), a_2k+1 = P_k(X) + P_{k-1}(X)
/// with X = c1 c2 - 2.
inline Int a_sequence(Int c1, Int c2, int l) {
  if (l < 0) throw std::invalid_argument("a_sequence: l must be >= 0");
  if (l == 0) return 0;
  if (l == 1) return 1;
  const Int x = c1 * c2 - 2;
  const int k = l / 2;
  if (l % 2 == 0) return c1 * chebyshev(k - 1, x);
  return chebyshev(k, x) + chebyshev(k - 1, x);
}

/// Minimal l with a_{l+1} < 0; nullopt (unbounded) when c1 c2 >= 4.
inline std::optional<int> l_max(Int c1, Int c2) {
  if (c1 * c2 >= 4) return std::nullopt;
  for (int l = 0;; ++l) {
    if (a_sequence(c1, c2, l + 1) < 0) return l;
  }
}

/// Rank 2 system for iota = ... 2 1 2 1 with <h_1,alpha_2> = -c1,
/// <h_2,alpha_1> = -c2. lambda = nullopt gives the B(inf) cone. For
/// c1 c2 >= 4 the coordinates are cut at `window`.
inline FormSet rank2_system(Int c1, Int c2, const std::optional<Weight>& lambda,
                            std::optional<int> window = std::nullopt) {
  if (lambda && (lambda->rank() != 2 || !lambda->dominant()))
    throw std::invalid_argument("rank2_system: need a dominant rank 2 weight");
  const auto lm = l_max(c1, c2);
  if (!lm && !window)
    throw std::invalid_argument("rank2_system: infinite type needs a window");
  const int bound = lm ? *lm : *window;

  FormSet fs;
  fs.support_bound = bound;
  fs.lambda = lambda;
  fs.saturated = true;
  for (int k = 1; k <= bound; ++k)
    fs.add(LinearForm::coordinate(k), {"x_" + std::to_string(k) + " >= 0", {}});
  if (lambda) {
    LinearForm f(Rational(lambda->pairing(1)));
    f.set(1, -1);
    fs.add(f, {"lambda_1 >= x_1", {}});
  }
  for (int l = 1; l < bound; ++l) {
    LinearForm f;
    f.set(l, a_sequence(c1, c2, l));
    f.add_scaled(-a_sequence(c1, c2, l - 1), LinearForm::coordinate(l + 1));
    fs.add(f, {"a_l x_l - a_{l-1} x_{l+1}, l=" + std::to_string(l), {}});
    if (lambda) {
      LinearForm g(Rational(lambda->pairing(2)));
      g.set(l, a_sequence(c2, c1, l + 1));
      g.add_scaled(-a_sequence(c2, c1, l), LinearForm::coordinate(l + 1));
      fs.add(g, {"lambda_2 + a'_{l+1} x_l - a'_l x_{l+1}, l=" +
                     std::to_string(l),
                 {}});
    }
  }
  return fs;
}

/// Flat position of the double index (j;i) for A_n: (j-1) n + i.
inline int an_position(int n, int j, int i) { return (j - 1) * n + i; }

/// A_n system for iota = ... n ... 2 1 (i_1 = 1, ..., i_n = n per block) over
/// positions 1..n^2. lambda = nullopt drops the weight conditions.
inline FormSet an_system(int n, const std::optional<Weight>& lambda) {
  if (n < 1) throw std::invalid_argument("an_system: n must be >= 1");
  if (lambda && (lambda->rank() != n || !lambda->dominant()))
    throw std::invalid_argument("an_system: need a dominant weight of rank n");
  FormSet fs;
  fs.support_bound = n * n;
  fs.lambda = lambda;
  fs.saturated = true;

  auto x = [&](int j, int i) -> LinearForm {
    if (j < 1 || i < 1 || i > n) return LinearForm{};
    return LinearForm::coordinate(an_position(n, j, i));
  };

  // x_{1;i} >= x_{2;i-1} >= ... >= x_{i;1} >= 0
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      LinearForm f = x(j, i - j + 1);
      f.add_scaled(-1, x(j + 1, i - j));
      fs.add(f, {"chain", {}});
    }
    fs.add(x(i, 1), {"chain", {}});
  }
  // x_{j;i} = 0 for i + j > n + 1, as a pair of opposite forms.
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (i + j <= n + 1) continue;
      LinearForm neg;
      neg.add_scaled(-1, x(j, i));
      fs.add(x(j, i), {"zero", {}});
      fs.add(neg, {"zero", {}});
    }
  }
  if (lambda) {
    // lambda_i >= x_{j;i-j+1} - x_{j;i-j}
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= i; ++j) {
        LinearForm f(Rational(lambda->pairing(i)));
        f.add_scaled(-1, x(j, i - j + 1));
        f.add_scaled(1, x(j, i - j));
        fs.add(f, {"lambda_" + std::to_string(i), {}});
      }
    }
  }
  return fs;
}

/// A word i_N ... i_1 claimed to be a reduced expression of w_0.
/// letters[0] = i_1.
struct ReducedWord {
  std::vector<int> letters;
  int length() const { return static_cast<int>(letters.size()); }
};

struct TruncationReport {
  std::vector<Violation> violations;
  std::size_t nodes_checked = 0;
  int max_support = 0;
  bool ok() const { return violations.empty(); }
};

/// On the B(inf) BFS for iota = (word repeated): (a) x_k = 0 for k > N and
/// (b) x_l = 0 whenever i_l = i_{l-1}.
inline TruncationReport truncation_check(const CartanData& cartan,
                                         const ReducedWord& word, int depth,
                                         int jobs = 1) {
  const Sequence seq(word.letters, cartan.rank());
  const ZCrystal crystal(cartan, seq);
  const auto graph = crystal.bfs(depth, jobs);
  TruncationReport r;
  r.nodes_checked = graph.size();
  const int n = word.length();
  for (const auto& x : graph.nodes) {
    r.max_support = std::max(r.max_support, x.max_position());
    for (const auto& [k, v] : x.coords()) {
      if (k > n)
        r.violations.push_back(
            {"x_k = 0 beyond the reduced word",
             x.str() + " has x_" + std::to_string(k) + "=" + std::to_string(v)});
      if (k > 1 && seq.at(k) == seq.at(k - 1))
        r.violations.push_back(
            {"repeated letter coordinate vanishes",
             x.str() + " has x_" + std::to_string(k) + "=" + std::to_string(v)});
    }
  }
  return r;
}

}  // namespace crystalpoly
