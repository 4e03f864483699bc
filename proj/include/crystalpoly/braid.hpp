#pragma once

// Braid-type isomorphisms
//   phi^(k)_ij : B_i (x) B_j (x) ... -> B_j (x) B_i (x) ...
// for k = c1*c2 in {0,1,2,3}, where c1 = -<h_i,alpha_j>, c2 = -<h_j,alpha_i>.
// The pattern has 2, 3, 4 or 6 alternating factors; phi^(k)_ji (c1 and c2
// exchanged) is the inverse.

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/crystal.hpp"
#include "crystalpoly/tensor.hpp"
#include "crystalpoly/types.hpp"
#include "crystalpoly/zcrystal.hpp"

namespace crystalpoly {

class BraidContext {
 public:
  BraidContext(int i, int j, Int c1, Int c2) : i_(i), j_(j), c1_(c1), c2_(c2) {
    if (i == j) throw std::invalid_argument("braid: i and j must differ");
    if (c1 < 0 || c2 < 0)
      throw std::invalid_argument("braid: c1, c2 must be nonnegative");
    if (c1 * c2 > 3)
      throw std::invalid_argument("braid: c1*c2 = " + std::to_string(c1 * c2) +
                                  " exceeds 3");
    if ((c1 == 0) != (c2 == 0))
      throw std::invalid_argument("braid: c1 = 0 iff c2 = 0");
  }

  static BraidContext from_cartan(const CartanData& cartan, int i, int j) {
    if (!cartan.valid_index(i) || !cartan.valid_index(j))
      throw std::invalid_argument("braid: index out of range");
    return BraidContext(i, j, -cartan.a(i, j), -cartan.a(j, i));
  }

  int i() const { return i_; }
  int j() const { return j_; }
  Int c1() const { return c1_; }
  Int c2() const { return c2_; }
  int k() const { return static_cast<int>(c1_ * c2_); }

  /// Number of factors in the pattern: 2, 3, 4, 6.
  int length() const {
    static constexpr std::array<int, 4> lengths{2, 3, 4, 6};
    return lengths[static_cast<std::size_t>(k())];
  }

  BraidContext mirrored() const { return BraidContext(j_, i_, c2_, c1_); }

  /// Letter indices of the domain pattern: i, j, i, ...
  std::vector<int> pattern() const {
    std::vector<int> out;
    for (int n = 0; n < length(); ++n) out.push_back(n % 2 == 0 ? i_ : j_);
    return out;
  }

 private:
  int i_;
  int j_;
  Int c1_;
  Int c2_;
};

namespace detail {

inline std::vector<Int> braid_values(const BraidContext& ctx,
                                     const TensorElem& t) {
  if (t.unit)
    throw std::invalid_argument("braid: window must not contain r_lambda");
  const auto pat = ctx.pattern();
  if (t.letters.size() != pat.size())
    throw std::invalid_argument("braid: expected " +
                                std::to_string(pat.size()) + " factors, got " +
                                std::to_string(t.letters.size()));
  std::vector<Int> v;
  for (std::size_t n = 0; n < pat.size(); ++n) {
    if (t.letters[n].index != pat[n])
      throw std::invalid_argument("braid: factor " + std::to_string(n + 1) +
                                  " has index " +
                                  std::to_string(t.letters[n].index) +
                                  ", pattern needs " + std::to_string(pat[n]));
    v.push_back(t.letters[n].value);
  }
  return v;
}

inline TensorElem braid_output(const BraidContext& ctx,
                               const std::vector<Int>& values) {
  return make_tensor(ctx.mirrored().pattern(), values);
}

inline std::vector<Int> phi1_values(Int x, Int y, Int z) {
  const Int t = clamp_pos(-x + y - z);
  return {z + t, x + z, y - z - t};
}

inline std::vector<Int> phi2_values(Int c1, Int c2, Int x, Int y, Int z,
                                    Int w) {
  const Int p = clamp_pos(x - c1 * y + z);
  const Int q = clamp_pos(-c2 * x + y - w + c2 * p);
  const Int r = clamp_pos(-x + z - c1 * w + p);
  return {w + q, x + c1 * w + r, y - q, z - c1 * w - r};
}

inline std::vector<Int> phi3_nested_values(Int c1, Int c2,
                                           const std::vector<Int>& in) {
  const Int x = in[0], y = in[1], z = in[2], u = in[3], v = in[4], w = in[5];
  const Int a = -x + c1 * y - z;
  const Int b = -y + c2 * z - u;
  const Int c = -z + c1 * u - v;
  const Int d = -u + c2 * v - w;
  const Int ap = clamp_pos(a);
  const Int X =
      w + clamp_pos(d + clamp_pos(c2 * c + clamp_pos(2 * b + c2 * ap)));
  const Int Y = x + c1 * w +
                clamp_pos(c1 * d + clamp_pos(3 * c + clamp_pos(2 * c1 * b + 2 * ap)));
  const Int V = u - w -
                clamp_pos(2 * d + clamp_pos(2 * c2 * c + clamp_pos(3 * b + c2 * ap)));
  const Int W = v - c1 * w -
                clamp_pos(c1 * d + clamp_pos(2 * c + clamp_pos(c1 * b + ap)));
  return {X, Y, y + u + w - X - V, x + z + v - Y - W, V, W};
}

inline std::vector<Int> phi3_alt_values(Int c1, Int c2,
                                        const std::vector<Int>& in) {
  const Int x = in[0], y = in[1], z = in[2], u = in[3], v = in[4], w = in[5];
  const Int X = std::max({-c2 * x + y, -2 * y + c2 * z, -c2 * z + 2 * u,
                          -u + c2 * v, w});
  const Int Y = std::max({-x + z, x - 2 * c1 * y + 3 * z,
                          x - 3 * z + 2 * c1 * u, x - c1 * u + 3 * v,
                          x + c1 * w});
  const Int V = std::min({c2 * x + w, 3 * y - c2 * z + w,
                          2 * c2 * z - 3 * u + w, 3 * u - 2 * c2 * v + w,
                          u - w});
  const Int W = std::min({x, c1 * y - z, 2 * z - c1 * u, c1 * u - 2 * v,
                          v - c1 * w});
  return {X, Y, y + u + w - X - V, x + z + v - Y - W, V, W};
}

}  // namespace detail

/// phi^(k)_ij on a window matching ctx.pattern(). The k = 3 case uses the
/// max/min expressions; phi3_nested() keeps the nested-clamp version.
inline TensorElem phi(const BraidContext& ctx, const TensorElem& input) {
  const auto v = detail::braid_values(ctx, input);
  switch (ctx.k()) {
    case 0:
      return detail::braid_output(ctx, {v[1], v[0]});
    case 1:
      return detail::braid_output(ctx, detail::phi1_values(v[0], v[1], v[2]));
    case 2:
      return detail::braid_output(
          ctx, detail::phi2_values(ctx.c1(), ctx.c2(), v[0], v[1], v[2], v[3]));
    default:
      return detail::braid_output(
          ctx, detail::phi3_alt_values(ctx.c1(), ctx.c2(), v));
  }
}

/// phi^(k)_ji, the inverse of phi^(k)_ij; input has the mirrored pattern.
inline TensorElem phi_inverse(const BraidContext& ctx,
                              const TensorElem& input) {
  return phi(ctx.mirrored(), input);
}

inline TensorElem phi3_altform(const BraidContext& ctx,
                               const TensorElem& input) {
  if (ctx.k() != 3) throw std::invalid_argument("phi3_altform: needs c1*c2 = 3");
  return detail::braid_output(
      ctx, detail::phi3_alt_values(ctx.c1(), ctx.c2(),
                                   detail::braid_values(ctx, input)));
}

inline TensorElem phi3_nested(const BraidContext& ctx,
                              const TensorElem& input) {
  if (ctx.k() != 3) throw std::invalid_argument("phi3_nested: needs c1*c2 = 3");
  return detail::braid_output(
      ctx, detail::phi3_nested_values(ctx.c1(), ctx.c2(),
                                      detail::braid_values(ctx, input)));
}

/// Replaces the factors [first, first + ctx.length()) of `word` by their image
/// under phi; every other factor, and r_lambda, is left alone.
inline TensorElem apply_at(const BraidContext& ctx, const TensorElem& word,
                           std::size_t first) {
  const auto len = static_cast<std::size_t>(ctx.length());
  if (first + len > word.letters.size())
    throw std::invalid_argument("apply_at: window runs past the word");
  TensorElem window;
  window.letters.assign(word.letters.begin() + static_cast<long>(first),
                        word.letters.begin() + static_cast<long>(first + len));
  const TensorElem image = phi(ctx, window);
  TensorElem out = word;
  std::copy(image.letters.begin(), image.letters.end(),
            out.letters.begin() + static_cast<long>(first));
  return out;
}

/// iota with the letters at `window` (positions, e.g. {4,5,6}) replaced by the
/// mirrored braid pattern. The window must be contiguous and lie inside the
/// first period.
inline Sequence braid_sequence(const Sequence& seq, const BraidContext& ctx,
                               int lowest_position) {
  std::vector<int> period = seq.period();
  const int top = lowest_position + ctx.length() - 1;
  if (lowest_position < 1 || top > seq.period_length())
    throw std::invalid_argument("braid_sequence: window outside the period");
  const auto mirrored = ctx.mirrored().pattern();
  // The leftmost tensor factor is the highest position.
  for (int n = 0; n < ctx.length(); ++n)
    period[static_cast<std::size_t>(top - n - 1)] =
        mirrored[static_cast<std::size_t>(n)];
  int rank = 0;
  for (int v : period) rank = std::max(rank, v);
  for (int v : seq.period()) rank = std::max(rank, v);
  return Sequence(std::move(period), rank);
}

/// Applies phi at Z^inf positions lowest_position .. lowest_position+len-1 of
/// x, using the x_k <-> (-x_k)_{i_k} correspondence. The letters of iota at
/// the window must read i, j, i, ... from the highest position down.
inline ZVector apply_at_positions(const BraidContext& ctx, const Sequence& seq,
                                  const ZVector& x, int lowest_position) {
  const int len = ctx.length();
  const int top = lowest_position + len - 1;
  TensorElem window;
  for (int k = top; k >= lowest_position; --k)
    window.letters.push_back({seq.at(k), -x.at(k)});
  const TensorElem image = phi(ctx, window);
  ZVector out = x;
  for (int n = 0; n < len; ++n)
    out.set(top - n, -image.letters[static_cast<std::size_t>(n)].value);
  return out;
}

struct BraidFuzzReport {
  Int c1 = 0;
  Int c2 = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Random windows with entries in [-range, range] for phi^(k)_12 on the rank 2
/// datum (c1, c2): strict-morphism conditions, phi_inverse o phi = id, and
/// (k = 3) agreement of the nested and max/min forms. Inputs are drawn before
/// any checking, so the report does not depend on `jobs`.
inline BraidFuzzReport braid_fuzz(Int c1, Int c2, std::size_t samples,
                                  std::uint64_t seed, Int range = 10,
                                  int jobs = 1) {
  const BraidContext ctx(1, 2, c1, c2);
  const CartanData cartan({{2, -c1}, {-c2, 2}});
  const TensorCrystal crystal(cartan);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> dist(-range, range);

  std::vector<TensorElem> inputs;
  inputs.reserve(samples);
  const auto pat = ctx.pattern();
  for (std::size_t n = 0; n < samples; ++n) {
    std::vector<Int> values;
    for (std::size_t p = 0; p < pat.size(); ++p) values.push_back(dist(rng));
    inputs.push_back(make_tensor(pat, values));
  }

  auto check = [&](std::size_t start, std::size_t stop) {
    const std::vector<TensorElem> chunk(inputs.begin() + static_cast<long>(start),
                                        inputs.begin() + static_cast<long>(stop));
    auto found = check_strict_morphism(
        crystal, crystal, [&](const TensorElem& b) { return phi(ctx, b); },
        chunk);
    for (const auto& b : chunk) {
      const TensorElem image = phi(ctx, b);
      if (phi_inverse(ctx, image) != b)
        found.push_back({"involution", crystal.describe(b)});
      if (ctx.k() == 3 && phi3_nested(ctx, b) != image)
        found.push_back({"phi3 nested = max/min form", crystal.describe(b)});
    }
    return found;
  };

  BraidFuzzReport r{c1, c2, seed, samples, {}};
  const std::size_t parts = static_cast<std::size_t>(std::max(1, jobs));
  const std::size_t per = (samples + parts - 1) / parts;
  std::vector<std::future<std::vector<Violation>>> tasks;
  for (std::size_t start = 0; start < samples; start += per)
    tasks.push_back(std::async(parts > 1 ? std::launch::async : std::launch::deferred,
                               check, start, std::min(samples, start + per)));
  for (auto& t : tasks) {
    auto part = t.get();
    r.violations.insert(r.violations.end(), part.begin(), part.end());
  }
  return r;
}

}  // namespace crystalpoly
