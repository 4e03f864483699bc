#pragma once

// Generic crystal interface and the checkers that run against it: the
// Kashiwara axioms on a sample of elements and the strict-morphism conditions
// for a map between two crystals.

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/types.hpp"

namespace crystalpoly {

template <class C>
concept CrystalModel = requires(const C& c, const typename C::Element& b,
                                int i) {
  { c.cartan() } -> std::convertible_to<const CartanData&>;
  { c.f(b, i) } -> std::same_as<std::optional<typename C::Element>>;
  { c.e(b, i) } -> std::same_as<std::optional<typename C::Element>>;
  { c.epsilon(b, i) } -> std::same_as<ExtInt>;
  { c.phi(b, i) } -> std::same_as<ExtInt>;
  { c.weight(b) } -> std::same_as<Weight>;
  { c.describe(b) } -> std::convertible_to<std::string>;
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct AxiomOptions {
  /// epsilon_i(b) = max{k : e_i^k b != 0} whenever epsilon_i(b) is finite.
  bool epsilon_is_string_length = false;
  /// phi_i(b) = max{k : f_i^k b != 0} whenever phi_i(b) is finite.
  bool phi_is_string_length = false;
  int string_cap = 256;
};

namespace detail {

template <class C>
Weight shifted(const C& c, Weight w, int i, Int m) {
  w.add_root(c.cartan(), i, m);
  return w;
}

}  // namespace detail

/// Checks phi = eps + <h,wt>, the weight shifts under e_i/f_i, e/f
/// adjointness, the -inf rule and the shifts of eps/phi under e_i/f_i on every
/// sampled element. Returns the violations found (empty = pass).
template <CrystalModel C>
std::vector<Violation> check_axioms(const C& c,
                                    const std::vector<typename C::Element>& sample,
                                    const AxiomOptions& opt = {}) {
  std::vector<Violation> out;
  auto fail = [&](const char* rule, const typename C::Element& b, int i) {
    out.push_back(
        {rule, c.describe(b) + " at i=" + std::to_string(i)});
  };
  const int n = c.cartan().rank();
  for (const auto& b : sample) {
    const Weight w = c.weight(b);
    for (int i = 1; i <= n; ++i) {
      const ExtInt eps = c.epsilon(b, i);
      const ExtInt ph = c.phi(b, i);
      if (eps.finite() != ph.finite() ||
          (eps.finite() && ph.value() != eps.value() + w.pairing(i)))
        fail("phi = eps + <h,wt>", b, i);

      const auto fb = c.f(b, i);
      const auto eb = c.e(b, i);
      if (eps.is_neg_inf() && (fb || eb)) fail("eps = -inf kills e/f", b, i);

      if (fb) {
        if (c.weight(*fb) != detail::shifted(c, w, i, -1))
          fail("wt(f b) = wt(b) - alpha", b, i);
        const auto back = c.e(*fb, i);
        if (!back || !(*back == b)) fail("e f b = b", b, i);
        if (c.epsilon(*fb, i) != eps + 1) fail("eps(f b) = eps(b) + 1", b, i);
        if (c.phi(*fb, i) != ph - 1) fail("phi(f b) = phi(b) - 1", b, i);
      }
      if (eb) {
        if (c.weight(*eb) != detail::shifted(c, w, i, +1))
          fail("wt(e b) = wt(b) + alpha", b, i);
        const auto back = c.f(*eb, i);
        if (!back || !(*back == b)) fail("f e b = b", b, i);
        if (c.epsilon(*eb, i) != eps - 1) fail("eps(e b) = eps(b) - 1", b, i);
        if (c.phi(*eb, i) != ph + 1) fail("phi(e b) = phi(b) + 1", b, i);
      }

      auto string_length = [&](auto step) {
        int len = 0;
        std::optional<typename C::Element> cur = b;
        while (len <= opt.string_cap) {
          cur = step(*cur);
          if (!cur) break;
          ++len;
        }
        return len;
      };
      if (opt.epsilon_is_string_length && eps.finite()) {
        const int len =
            string_length([&](const auto& x) { return c.e(x, i); });
        if (len != eps.value()) fail("eps = e-string length", b, i);
      }
      if (opt.phi_is_string_length && ph.finite()) {
        const int len =
            string_length([&](const auto& x) { return c.f(x, i); });
        if (len != ph.value()) fail("phi = f-string length", b, i);
      }
    }
  }
  return out;
}

/// Checks that `map` is a strict morphism on the sampled domain elements:
/// wt, eps_i, phi_i preserved and map commuting with e_i, f_i (with 0 -> 0).
template <CrystalModel D, CrystalModel T, class Map>
std::vector<Violation> check_strict_morphism(
    const D& dom, const T& cod, Map map,
    const std::vector<typename D::Element>& sample,
    std::vector<int> indices = {}) {
  if (indices.empty()) {
    for (int i = 1; i <= dom.cartan().rank(); ++i) indices.push_back(i);
  }
  std::vector<Violation> out;
  auto fail = [&](const char* rule, const typename D::Element& b, int i) {
    out.push_back({rule, dom.describe(b) + " at i=" + std::to_string(i)});
  };
  auto apply = [&](const std::optional<typename D::Element>& x)
      -> std::optional<typename T::Element> {
    if (!x) return std::nullopt;
    return map(*x);
  };
  for (const auto& b : sample) {
    const std::optional<typename T::Element> image = map(b);
    if (!image) continue;
    if (cod.weight(*image) != dom.weight(b)) fail("wt preserved", b, 0);
    for (int i : indices) {
      if (cod.epsilon(*image, i) != dom.epsilon(b, i))
        fail("eps preserved", b, i);
      if (cod.phi(*image, i) != dom.phi(b, i)) fail("phi preserved", b, i);
      if (apply(dom.f(b, i)) != cod.f(*image, i)) fail("f commutes", b, i);
      if (apply(dom.e(b, i)) != cod.e(*image, i)) fail("e commutes", b, i);
    }
  }
  return out;
}

}  // namespace crystalpoly
