#pragma once

// Tensor products of elementary crystals B_i, optionally closed on the right
// by the one-element crystal R_lambda.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/crystal.hpp"
#include "crystalpoly/crystal_graph.hpp"
#include "crystalpoly/types.hpp"

namespace crystalpoly {

/// The element (x)_i of B_i.
struct Letter {
  int index = 1;
  Int value = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// b_1 (x) b_2 (x) ... (x) b_n [(x) r_lambda]. Letters are listed left to right.
/// The absorbing element 0 is represented by std::nullopt at the API boundary.
struct TensorElem {
  std::vector<Letter> letters;
  std::optional<Weight> unit;

  friend bool operator==(const TensorElem&, const TensorElem&) = default;
  friend auto operator<=>(const TensorElem& a, const TensorElem& b) {
    if (auto c = a.letters <=> b.letters; c != 0) return c;
    return a.unit <=> b.unit;
  }
};

/// How a multi-factor tensor is bracketed before the two-factor rules apply.
/// The results agree (associativity); Left is canonical.
enum class Bracketing { Left, Right };

/// eps_i, phi_i and <h_i, wt> of a tensor element.
struct LocalData {
  ExtInt epsilon;
  ExtInt phi;
  Int weight = 0;
};

class TensorCrystal {
 public:
  using Element = TensorElem;

  explicit TensorCrystal(CartanData cartan,
                         Bracketing bracketing = Bracketing::Left)
      : cartan_(std::move(cartan)), bracketing_(bracketing) {}

  const CartanData& cartan() const { return cartan_; }

  Weight weight(const TensorElem& b) const {
    Weight w = b.unit ? *b.unit : Weight::zero(cartan_.rank());
    for (const auto& l : b.letters) w.add_root(cartan_, l.index, l.value);
    return w;
  }

  /// Data of a single factor (position < letters.size(), else the unit).
  LocalData factor(const TensorElem& b, std::size_t pos, int i) const {
    if (pos < b.letters.size()) {
      const Letter& l = b.letters[pos];
      const Int w = l.value * cartan_.a(i, l.index);
      if (l.index != i) return {ExtInt::neg_inf(), ExtInt::neg_inf(), w};
      return {ExtInt(-l.value), ExtInt(l.value), w};
    }
    const Int w = b.unit->pairing(i);
    return {ExtInt(-w), ExtInt(0), w};
  }

  LocalData eps_phi_wt(const TensorElem& b, int i) const {
    const std::size_t n = factor_count(b);
    LocalData acc = factor(b, 0, i);
    for (std::size_t p = 1; p < n; ++p) acc = combine(acc, factor(b, p, i));
    return acc;
  }

  ExtInt epsilon(const TensorElem& b, int i) const {
    return eps_phi_wt(b, i).epsilon;
  }
  ExtInt phi(const TensorElem& b, int i) const { return eps_phi_wt(b, i).phi; }

  std::optional<TensorElem> f(const TensorElem& b, int i) const {
    return act(b, i, /*raise=*/false);
  }
  std::optional<TensorElem> e(const TensorElem& b, int i) const {
    return act(b, i, /*raise=*/true);
  }

  /// Index of the factor that f_i (raise=false) or e_i (raise=true) acts on.
  std::size_t acting_factor(const TensorElem& b, int i, bool raise) const {
    const std::size_t n = factor_count(b);
    if (bracketing_ == Bracketing::Left) {
      // ((b_0 b_1) b_2) ...: prefix data, then walk back from the right.
      std::vector<LocalData> prefix(n);
      prefix[0] = factor(b, 0, i);
      for (std::size_t p = 1; p < n; ++p)
        prefix[p] = combine(prefix[p - 1], factor(b, p, i));
      for (std::size_t p = n - 1; p > 0; --p) {
        const ExtInt left_phi = prefix[p - 1].phi;
        const ExtInt right_eps = factor(b, p, i).epsilon;
        const bool go_left = raise ? left_phi >= right_eps : left_phi > right_eps;
        if (!go_left) return p;
      }
      return 0;
    }
    // b_0 (b_1 (b_2 ...)): suffix data, then walk from the left.
    std::vector<LocalData> suffix(n);
    suffix[n - 1] = factor(b, n - 1, i);
    for (std::size_t p = n - 1; p > 0; --p)
      suffix[p - 1] = combine(factor(b, p - 1, i), suffix[p]);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      const ExtInt left_phi = factor(b, p, i).phi;
      const ExtInt right_eps = suffix[p + 1].epsilon;
      const bool here = raise ? left_phi >= right_eps : left_phi > right_eps;
      if (here) return p;
    }
    return n - 1;
  }

  std::string describe(const TensorElem& b) const;

 private:
  static std::size_t factor_count(const TensorElem& b) {
    return b.letters.size() + (b.unit ? 1 : 0);
  }

  /// Two-factor rules for b1 (x) b2.
  static LocalData combine(const LocalData& b1, const LocalData& b2) {
    return {max(b1.epsilon, b2.epsilon - b1.weight),
            max(b2.phi, b1.phi + b2.weight), b1.weight + b2.weight};
  }

  std::optional<TensorElem> act(const TensorElem& b, int i, bool raise) const {
    if (factor_count(b) == 0) return std::nullopt;
    const std::size_t p = acting_factor(b, i, raise);
    if (p >= b.letters.size()) return std::nullopt;  // r_lambda is killed
    if (b.letters[p].index != i) return std::nullopt;
    TensorElem out = b;
    out.letters[p].value += raise ? 1 : -1;
    return out;
  }

  CartanData cartan_;
  Bracketing bracketing_;
};

inline std::string TensorCrystal::describe(const TensorElem& b) const {
  std::string s;
  for (std::size_t p = 0; p < b.letters.size(); ++p) {
    if (p) s += " (x) ";
    s += "(" + std::to_string(b.letters[p].value) + ")_" +
         std::to_string(b.letters[p].index);
  }
  if (b.unit) {
    if (!b.letters.empty()) s += " (x) ";
    s += "r[";
    for (std::size_t n = 0; n < b.unit->coeffs.size(); ++n) {
      if (n) s += ",";
      s += std::to_string(b.unit->coeffs[n]);
    }
    s += "]";
  }
  return s.empty() ? "()" : s;
}

// Free-function spellings of the crystal-core operations.

inline LocalData eps_phi_wt(const TensorCrystal& c, const TensorElem& b,
                            int i) {
  return c.eps_phi_wt(b, i);
}

inline std::optional<TensorElem> f_tilde(const TensorCrystal& c,
                                         const std::optional<TensorElem>& b,
                                         int i) {
  return b ? c.f(*b, i) : std::nullopt;
}

inline std::optional<TensorElem> e_tilde(const TensorCrystal& c,
                                         const std::optional<TensorElem>& b,
                                         int i) {
  return b ? c.e(*b, i) : std::nullopt;
}

/// f-closure of `seed` to the given depth.
inline CrystalGraph<TensorElem> connected_component(const TensorCrystal& c,
                                                    const TensorElem& seed,
                                                    int depth, int jobs = 1) {
  return bfs_closure(
      seed, c.cartan().rank(), depth,
      [&](const TensorElem& b, int i) { return c.f(b, i); }, jobs);
}

/// Builds (x_1)_{i_1} (x) (x_2)_{i_2} ... from parallel index/value lists.
inline TensorElem make_tensor(const std::vector<int>& indices,
                              const std::vector<Int>& values,
                              std::optional<Weight> unit = std::nullopt) {
  TensorElem t;
  for (std::size_t n = 0; n < indices.size(); ++n)
    t.letters.push_back({indices[n], values.at(n)});
  t.unit = std::move(unit);
  return t;
}

}  // namespace crystalpoly
