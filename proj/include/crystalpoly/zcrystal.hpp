#pragma once

// The crystal structure on Z^inf_iota (B(inf) mode) and Z^inf_iota[lambda]
// (B(lambda) mode). Elements are finitely supported integer sequences
// (..., x_2, x_1); the Kashiwara embedding images are the f-closures of 0.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/crystal.hpp"
#include "crystalpoly/crystal_graph.hpp"
#include "crystalpoly/tensor.hpp"
#include "crystalpoly/types.hpp"

namespace crystalpoly {

/// Finitely supported integer sequence; absent positions are 0 and stored
/// entries are never 0.
class ZVector {
 public:
  ZVector() = default;
  ZVector(std::initializer_list<std::pair<const int, Int>> init) {
    for (const auto& [k, v] : init) set(k, v);
  }

  /// Dense constructor: values[0] = x_1, values[1] = x_2, ...
  static ZVector from_dense(const std::vector<Int>& values) {
    ZVector x;
    for (std::size_t n = 0; n < values.size(); ++n)
      x.set(static_cast<int>(n) + 1, values[n]);
    return x;
  }

  Int at(int k) const {
    auto it = coords_.find(k);
    return it == coords_.end() ? 0 : it->second;
  }

  void set(int k, Int v) {
    if (k < 1) throw std::out_of_range("ZVector: position must be >= 1");
    if (v == 0)
      coords_.erase(k);
    else
      coords_[k] = v;
  }

  void add(int k, Int d) { set(k, at(k) + d); }

  /// Largest position with a nonzero entry, 0 for the zero vector.
  int max_position() const {
    return coords_.empty() ? 0 : coords_.rbegin()->first;
  }

  bool is_zero() const { return coords_.empty(); }
  bool nonnegative() const {
    for (const auto& [k, v] : coords_)
      if (v < 0) return false;
    return true;
  }

  Int total() const {
    Int s = 0;
    for (const auto& [k, v] : coords_) s += v;
    return s;
  }

  std::vector<Int> dense(int length) const {
    std::vector<Int> out(static_cast<std::size_t>(length), 0);
    for (const auto& [k, v] : coords_)
      if (k <= length) out[static_cast<std::size_t>(k - 1)] = v;
    return out;
  }

  const std::map<int, Int>& coords() const { return coords_; }

  std::string str() const {
    if (coords_.empty()) return "0";
    std::string s = "(";
    bool first = true;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
      if (!first) s += ", ";
      first = false;
      s += "x" + std::to_string(it->first) + "=" + std::to_string(it->second);
    }
    return s + ")";
  }

  friend bool operator==(const ZVector&, const ZVector&) = default;
  friend auto operator<=>(const ZVector&, const ZVector&) = default;

 private:
  std::map<int, Int> coords_;
};

/// sigma^(i) together with the extreme positions of M^(i).
struct MSet {
  Int sigma = 0;
  int min_pos = 0;
  /// nullopt when M^(i) is infinite (exactly when sigma == 0).
  std::optional<int> max_pos;
};

struct WtEpsPhi {
  Weight wt;
  std::vector<Int> epsilon;
  std::vector<Int> phi;
};

class ZCrystal {
 public:
  using Element = ZVector;

  /// lambda = nullopt selects B(inf) mode.
  ZCrystal(CartanData cartan, Sequence seq,
           std::optional<Weight> lambda = std::nullopt)
      : cartan_(std::move(cartan)), seq_(std::move(seq)),
        lambda_(std::move(lambda)) {
    if (lambda_ && lambda_->rank() != cartan_.rank())
      throw std::invalid_argument("zcrystal: weight rank mismatch");
  }

  const CartanData& cartan() const { return cartan_; }
  const Sequence& sequence() const { return seq_; }
  const std::optional<Weight>& lambda() const { return lambda_; }
  bool binf() const { return !lambda_; }

  /// x_k + sum_{j>k} <h_{i_k}, alpha_{i_j}> x_j
  Int sigma(const ZVector& x, int k) const {
    const int ik = seq_.at(k);
    Int s = x.at(k);
    for (const auto& [j, v] : x.coords())
      if (j > k) s += cartan_.a(ik, seq_.at(j)) * v;
    return s;
  }

  /// -<h_i, lambda> + sum_j <h_i, alpha_{i_j}> x_j  (B(lambda) mode only)
  Int sigma0(const ZVector& x, int i) const {
    if (!lambda_)
      throw std::logic_error("zcrystal: sigma_0 is undefined in B(inf) mode");
    Int s = -lambda_->pairing(i);
    for (const auto& [j, v] : x.coords()) s += cartan_.a(i, seq_.at(j)) * v;
    return s;
  }

  MSet m_set(const ZVector& x, int i) const {
    // Past the support every sigma_k vanishes, so scanning one period beyond
    // it sees every distinct value.
    const int limit = x.max_position() + seq_.period_length();
    std::vector<std::pair<int, Int>> values;
    Int tail = 0;
    for (int k = limit; k >= 1; --k) {
      const int ik = seq_.at(k);
      if (ik == i) values.emplace_back(k, x.at(k) + tail);
      tail += cartan_.a(i, ik) * x.at(k);
    }
    MSet m;
    m.sigma = values.front().second;
    for (const auto& [k, s] : values) m.sigma = std::max(m.sigma, s);
    for (const auto& [k, s] : values) {  // descending k
      if (s != m.sigma) continue;
      m.min_pos = k;
      if (!m.max_pos) m.max_pos = k;
    }
    if (m.sigma <= 0) m.max_pos.reset();
    return m;
  }

  std::optional<ZVector> f(const ZVector& x, int i) const {
    const MSet m = m_set(x, i);
    if (lambda_ && !(m.sigma > sigma0(x, i))) return std::nullopt;
    ZVector y = x;
    y.add(m.min_pos, 1);
    return y;
  }

  std::optional<ZVector> e(const ZVector& x, int i) const {
    const MSet m = m_set(x, i);
    if (m.sigma <= 0) return std::nullopt;
    if (lambda_ && m.sigma < sigma0(x, i)) return std::nullopt;
    ZVector y = x;
    y.add(*m.max_pos, -1);
    return y;
  }

  Weight weight(const ZVector& x) const {
    Weight w = lambda_ ? *lambda_ : Weight::zero(cartan_.rank());
    for (const auto& [j, v] : x.coords()) w.add_root(cartan_, seq_.at(j), -v);
    return w;
  }

  ExtInt epsilon(const ZVector& x, int i) const {
    const Int s = m_set(x, i).sigma;
    return lambda_ ? std::max(s, sigma0(x, i)) : s;
  }

  ExtInt phi(const ZVector& x, int i) const {
    return epsilon(x, i) + weight(x).pairing(i);
  }

  WtEpsPhi wt_eps_phi(const ZVector& x) const {
    WtEpsPhi out{weight(x), {}, {}};
    for (int i = 1; i <= cartan_.rank(); ++i) {
      const Int eps = epsilon(x, i).value();
      out.epsilon.push_back(eps);
      out.phi.push_back(eps + out.wt.pairing(i));
    }
    return out;
  }

  std::string describe(const ZVector& x) const { return x.str(); }

  /// All f-descendants of the zero vector up to `depth` applications.
  CrystalGraph<ZVector> bfs(int depth, int jobs = 1) const {
    if (depth < 0) throw std::invalid_argument("bfs: negative depth");
    return bfs_closure(
        ZVector{}, cartan_.rank(), depth,
        [this](const ZVector& x, int i) { return f(x, i); }, jobs);
  }

  /// (-x_L)_{i_L} (x) ... (x) (-x_1)_{i_1} [(x) r_lambda]
  TensorElem to_tensor(const ZVector& x, int length) const {
    if (x.max_position() > length)
      throw std::out_of_range("to_tensor: support exceeds tensor length");
    TensorElem t;
    for (int k = length; k >= 1; --k)
      t.letters.push_back({seq_.at(k), -x.at(k)});
    t.unit = lambda_;
    return t;
  }

  ZVector from_tensor(const TensorElem& t) const {
    ZVector x;
    const int length = static_cast<int>(t.letters.size());
    for (int p = 0; p < length; ++p) {
      const int k = length - p;
      if (t.letters[static_cast<std::size_t>(p)].index != seq_.at(k))
        throw std::invalid_argument("from_tensor: letter index mismatch");
      x.set(k, -t.letters[static_cast<std::size_t>(p)].value);
    }
    return x;
  }

 private:
  CartanData cartan_;
  Sequence seq_;
  std::optional<Weight> lambda_;
};

// Free-function spellings.

inline Int sigma_k(const ZCrystal& c, const ZVector& x, int k) {
  return c.sigma(x, k);
}
inline Int sigma_0(const ZCrystal& c, const ZVector& x, int i) {
  return c.sigma0(x, i);
}
inline MSet m_set(const ZCrystal& c, const ZVector& x, int i) {
  return c.m_set(x, i);
}
inline std::optional<ZVector> f_action(const ZCrystal& c, const ZVector& x,
                                       int i) {
  return c.f(x, i);
}
inline std::optional<ZVector> e_action(const ZCrystal& c, const ZVector& x,
                                       int i) {
  return c.e(x, i);
}
inline WtEpsPhi wt_eps_phi(const ZCrystal& c, const ZVector& x) {
  return c.wt_eps_phi(x);
}
inline CrystalGraph<ZVector> bfs_enumerate(const ZCrystal& c, int depth,
                                           int jobs = 1) {
  return c.bfs(depth, jobs);
}

}  // namespace crystalpoly
