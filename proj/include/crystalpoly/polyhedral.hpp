#pragma once

// Affine forms c + sum_k phi_k x_k with exact rational coefficients, the
// piecewise-linear operators S_k / S^_k acting on them, and the inequality
// systems generated from coordinate (and lambda) seeds.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/zcrystal.hpp"

namespace crystalpoly {

using Rational = boost::rational<Int>;

// boost::rational's mixed comparisons with plain integers recurse forever
// under C++20's rewritten operators; compare through the numerator instead
// (the denominator is always positive).
inline int sign(const Rational& r) {
  return r.numerator() > 0 ? 1 : (r.numerator() < 0 ? -1 : 0);
}

inline std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(Rational constant) : constant_(constant) {}

  static LinearForm coordinate(int k) {
    LinearForm f;
    f.set(k, 1);
    return f;
  }

  const Rational& constant() const { return constant_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void set(int k, Rational v) {
    if (sign(v) == 0)
      coeffs_.erase(k);
    else
      coeffs_[k] = v;
  }

  void set_constant(Rational c) { constant_ = c; }

  /// this += s * other
  LinearForm& add_scaled(const Rational& s, const LinearForm& other) {
    constant_ += s * other.constant_;
    for (const auto& [k, v] : other.coeffs_) set(k, coeff(k) + s * v);
    return *this;
  }

  int max_position() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
  }

  /// Drops every coefficient at a position > bound.
  LinearForm projected(int bound) const {
    LinearForm f(constant_);
    for (const auto& [k, v] : coeffs_)
      if (k <= bound) f.coeffs_.emplace(k, v);
    return f;
  }

  Rational eval(const ZVector& x) const {
    Rational s = constant_;
    for (const auto& [k, v] : coeffs_) s += v * x.at(k);
    return s;
  }

  /// "1 + x_1 - 2 x_3 >= 0" style rendering of the inequality.
  std::string str() const {
    std::string s;
    auto term = [&](const Rational& v, const std::string& var) {
      const Rational mag = sign(v) < 0 ? -v : v;
      if (s.empty()) {
        if (sign(v) < 0) s += "-";
      } else {
        s += sign(v) < 0 ? " - " : " + ";
      }
      if (var.empty())
        s += rational_str(mag);
      else
        s += (mag == Rational(1) ? std::string() : rational_str(mag) + " ") + var;
    };
    if (sign(constant_) != 0) term(constant_, "");
    for (const auto& [k, v] : coeffs_) term(v, "x_" + std::to_string(k));
    if (s.empty()) s = "0";
    return s + " >= 0";
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    if (a.constant_ != b.constant_) return a.constant_ < b.constant_;
    return std::lexicographical_compare(
        a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
        [](const auto& p, const auto& q) {
          if (p.first != q.first) return p.first < q.first;
          return p.second < q.second;
        });
  }

 private:
  Rational constant_{0};
  std::map<int, Rational> coeffs_;
};

/// Which seed and operator word produced a form: ops are applied in order,
/// so {seed x_1, ops 1,2,5} is S_5 S_2 S_1 x_1.
struct Derivation {
  std::string seed;
  std::vector<int> ops;

  std::string str(bool hat) const {
    std::string s;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      s += std::string(hat ? "S^_" : "S_") + std::to_string(*it) + " ";
    return s + seed;
  }
};

struct FormSet {
  std::map<LinearForm, Derivation> forms;
  /// Coordinates beyond this position are identically zero.
  int support_bound = 0;
  std::optional<Weight> lambda;  // nullopt = B(inf) system
  bool saturated = false;
  int rounds = 0;
  std::vector<std::string> diagnostics;

  bool contains(const LinearForm& f) const { return forms.count(f) != 0; }
  std::size_t size() const { return forms.size(); }

  void add(LinearForm f, Derivation d = {}) {
    forms.try_emplace(std::move(f), std::move(d));
  }
};

/// The data the operators depend on: Cartan matrix, iota and (for B(lambda))
/// the highest weight.
class PolyhedralContext {
 public:
  PolyhedralContext(CartanData cartan, Sequence seq,
                    std::optional<Weight> lambda = std::nullopt)
      : cartan_(std::move(cartan)), seq_(std::move(seq)),
        lambda_(std::move(lambda)) {
    if (lambda_ && lambda_->rank() != cartan_.rank())
      throw std::invalid_argument("polyhedral: weight rank mismatch");
  }

  const CartanData& cartan() const { return cartan_; }
  const Sequence& sequence() const { return seq_; }
  const std::optional<Weight>& lambda() const { return lambda_; }
  bool binf() const { return !lambda_; }

  /// x_k + sum_{k<j<k+} <h_{i_k}, alpha_{i_j}> x_j + x_{k+}
  LinearForm beta_plus(int k) const {
    const int kp = k_plus(seq_, k);
    const int ik = seq_.at(k);
    LinearForm b;
    b.set(k, 1);
    for (int j = k + 1; j < kp; ++j) b.set(j, cartan_.a(ik, seq_.at(j)));
    b.set(kp, 1);
    return b;
  }

  /// beta_{k-} if k- > 0. For k- = 0: the zero form in B(inf) mode (beta_0 = 0),
  /// else -<h_{i_k},lambda> + sum_{j<k} <h_{i_k}, alpha_{i_j}> x_j + x_k.
  LinearForm beta_minus(int k) const {
    const int km = k_minus(seq_, k);
    if (km > 0) return beta_plus(km);
    if (!lambda_) return LinearForm{};
    const int ik = seq_.at(k);
    LinearForm b(Rational(-lambda_->pairing(ik)));
    for (int j = 1; j < k; ++j) b.set(j, cartan_.a(ik, seq_.at(j)));
    b.set(k, 1);
    return b;
  }

  /// S^_k (S_k in B(inf) mode).
  LinearForm s_hat(const LinearForm& form, int k) const {
    const Rational c = form.coeff(k);
    if (sign(c) == 0) return form;
    LinearForm out = form;
    out.add_scaled(-c, sign(c) > 0 ? beta_plus(k) : beta_minus(k));
    return out;
  }

  /// lambda^(i) = -beta^(-)_{iota^(i)}
  LinearForm lambda_form(int i) const {
    if (!lambda_)
      throw std::logic_error("polyhedral: lambda^(i) needs a weight");
    LinearForm f;
    f.add_scaled(-1, beta_minus(iota_first(seq_, i)));
    return f;
  }

  /// Applies S_{ops[0]} first, then S_{ops[1]}, ...
  LinearForm apply(const LinearForm& seed, const std::vector<int>& ops) const {
    LinearForm f = seed;
    for (int k : ops) f = s_hat(f, k);
    return f;
  }

 private:
  CartanData cartan_;
  Sequence seq_;
  std::optional<Weight> lambda_;
};

/// Closure of the seeds under S^_k, 1 <= k <= K, with every form projected
/// onto coordinates 1..K. Sound when the realized crystal is supported in
/// 1..K (e.g. iota begins with a reduced longest word and K >= its length).
inline FormSet generate_xi(const PolyhedralContext& ctx, int support_bound,
                           int max_rounds = 64) {
  if (support_bound < 1)
    throw std::invalid_argument("generate_xi: support bound must be >= 1");
  FormSet xi;
  xi.support_bound = support_bound;
  xi.lambda = ctx.lambda();

  std::vector<LinearForm> frontier;
  auto push = [&](LinearForm f, Derivation d) {
    if (xi.forms.try_emplace(f, std::move(d)).second)
      frontier.push_back(std::move(f));
  };
  for (int j = 1; j <= support_bound; ++j)
    push(LinearForm::coordinate(j), {"x_" + std::to_string(j), {}});
  if (ctx.lambda()) {
    for (int i = 1; i <= ctx.cartan().rank(); ++i)
      push(ctx.lambda_form(i).projected(support_bound),
           {"lambda^(" + std::to_string(i) + ")", {}});
  }

  while (!frontier.empty() && xi.rounds < max_rounds) {
    ++xi.rounds;
    std::vector<LinearForm> current = std::move(frontier);
    frontier.clear();
    for (const auto& f : current) {
      const Derivation base = xi.forms.at(f);
      for (int k = 1; k <= support_bound; ++k) {
        if (sign(f.coeff(k)) == 0) continue;
        Derivation d = base;
        d.ops.push_back(k);
        push(ctx.s_hat(f, k).projected(support_bound), std::move(d));
      }
    }
  }
  xi.saturated = frontier.empty();
  if (!xi.saturated)
    xi.diagnostics.push_back("round limit " + std::to_string(max_rounds) +
                             " reached before saturation");
  return xi;
}

struct PositivityWitness {
  LinearForm form;
  int position = 0;
  Derivation derivation;
};

struct PositivityReport {
  bool holds = true;
  std::vector<PositivityWitness> witnesses;
};

/// Positivity assumption on the (truncated) generated set: every
/// first-occurrence coefficient is >= 0.
inline PositivityReport check_positivity(const FormSet& xi,
                                         const Sequence& seq) {
  if (xi.lambda)
    throw std::invalid_argument("check_positivity: needs a B(inf) system");
  if (!xi.saturated)
    throw std::invalid_argument("check_positivity: system is not saturated");
  PositivityReport r;
  for (const auto& [f, d] : xi.forms) {
    for (const auto& [k, v] : f.coeffs()) {
      if (k_minus(seq, k) == 0 && sign(v) < 0) {
        r.holds = false;
        r.witnesses.push_back({f, k, d});
      }
    }
  }
  return r;
}

struct AmpleReport {
  bool ample = true;
  std::vector<std::pair<LinearForm, Derivation>> witnesses;
};

/// (iota, lambda) is ample iff 0 satisfies every form, i.e. no constant is
/// negative.
inline AmpleReport check_ample(const FormSet& xi) {
  if (!xi.lambda)
    throw std::invalid_argument("check_ample: needs a B(lambda) system");
  if (!xi.saturated)
    throw std::invalid_argument("check_ample: system is not saturated");
  AmpleReport r;
  for (const auto& [f, d] : xi.forms) {
    if (sign(f.constant()) < 0) {
      r.ample = false;
      r.witnesses.emplace_back(f, d);
    }
  }
  return r;
}

inline bool member(const FormSet& xi, const ZVector& x) {
  if (x.max_position() > xi.support_bound)
    throw std::out_of_range("member: vector support exceeds the bound " +
                            std::to_string(xi.support_bound));
  return std::all_of(xi.forms.begin(), xi.forms.end(),
                     [&](const auto& entry) { return sign(entry.first.eval(x)) >= 0; });
}

/// Nonnegative x supported in 1..K with sum x_k <= depth satisfying every
/// form. Depth-first over positions; a form is tested as soon as its last
/// position is assigned.
inline std::set<ZVector> enumerate_lattice_points(const FormSet& xi,
                                                  int depth) {
  const int bound = xi.support_bound;
  std::vector<std::vector<const LinearForm*>> ready(
      static_cast<std::size_t>(bound) + 1);
  for (const auto& [f, d] : xi.forms)
    ready[static_cast<std::size_t>(std::min(f.max_position(), bound))]
        .push_back(&f);

  std::set<ZVector> out;
  ZVector x;
  auto ok_at = [&](int pos) {
    return std::all_of(ready[static_cast<std::size_t>(pos)].begin(),
                       ready[static_cast<std::size_t>(pos)].end(),
                       [&](const LinearForm* f) { return sign(f->eval(x)) >= 0; });
  };
  if (!ok_at(0)) return out;

  auto rec = [&](auto& self, int pos, Int budget) -> void {
    if (pos > bound) {
      out.insert(x);
      return;
    }
    for (Int v = 0; v <= budget; ++v) {
      x.set(pos, v);
      if (ok_at(pos)) self(self, pos + 1, budget - v);
    }
    x.set(pos, 0);
  };
  rec(rec, 1, depth);
  return out;
}

}  // namespace crystalpoly
