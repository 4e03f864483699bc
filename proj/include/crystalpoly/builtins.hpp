#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/special.hpp"

namespace crystalpoly {

/// A named Cartan type with its canonical iota and, for finite types, the
/// length of w_0 and a reduced longest word (letters[0] = i_1).
struct BuiltinType {
  std::string name;
  CartanData cartan;
  Sequence iota;
  std::optional<int> longest_length;
  std::optional<ReducedWord> longest_word;
};

inline CartanData cartan_a(int n) {
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    if (i + 1 < n) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
      m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
    }
  }
  return CartanData(std::move(m));
}

namespace detail {

inline BuiltinType rank2_builtin(std::string name, Int c1, Int c2) {
  CartanData cartan({{2, -c1}, {-c2, 2}});
  Sequence iota({1, 2}, 2);
  BuiltinType t{std::move(name), cartan, iota, std::nullopt, std::nullopt};
  if (auto lm = l_max(c1, c2)) {
    t.longest_length = *lm;
    ReducedWord w;
    for (int k = 1; k <= *lm; ++k) w.letters.push_back(k % 2 == 1 ? 1 : 2);
    t.longest_word = w;
  }
  return t;
}

inline std::optional<int> parse_an(const std::string& name) {
  // "a3" or "an(3)"
  std::string digits;
  if (name.size() > 4 && name.rfind("an(", 0) == 0 && name.back() == ')')
    digits = name.substr(3, name.size() - 4);
  else if (name.size() > 1 && name[0] == 'a')
    digits = name.substr(1);
  else
    return std::nullopt;
  if (digits.empty()) return std::nullopt;
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  const int n = std::stoi(digits);
  if (n < 1) return std::nullopt;
  return n;
}

}  // namespace detail

/// Registry: a1xa1, a2, b2, c2, g2, a1tilde, and an(n) / a<n>.
inline BuiltinType builtin_type(const std::string& name) {
  if (name == "a1xa1") return detail::rank2_builtin(name, 0, 0);
  if (name == "b2") return detail::rank2_builtin(name, 2, 1);
  if (name == "c2") return detail::rank2_builtin(name, 1, 2);
  if (name == "g2") return detail::rank2_builtin(name, 1, 3);
  if (name == "a1tilde") return detail::rank2_builtin(name, 2, 2);
  if (auto n = detail::parse_an(name)) {
    std::vector<int> period;
    for (int i = 1; i <= *n; ++i) period.push_back(i);
    BuiltinType t{name, cartan_a(*n), Sequence(period, *n), *n * (*n + 1) / 2,
                  std::nullopt};
    // i_N ... i_1 = 1, 2 1, 3 2 1, ..., n ... 2 1 (121321 for A_3)
    ReducedWord w;
    for (int m = *n; m >= 1; --m)
      for (int i = 1; i <= m; ++i) w.letters.push_back(i);
    t.longest_word = w;
    return t;
  }
  throw std::invalid_argument("unknown builtin type '" + name + "'");
}

inline std::vector<std::string> builtin_names() {
  return {"a1xa1", "a2", "b2", "c2", "g2", "a1tilde", "an(n)"};
}

/// Validates a claimed reduced longest word by length against the type.
inline ReducedWord reduced_word(const BuiltinType& type,
                                std::vector<int> letters) {
  if (!type.longest_length)
    throw std::invalid_argument("reduced_word: " + type.name +
                                " has no longest element");
  if (static_cast<int>(letters.size()) != *type.longest_length)
    throw std::invalid_argument(
        "reduced_word: length " + std::to_string(letters.size()) +
        " != l(w_0) = " + std::to_string(*type.longest_length));
  for (int v : letters)
    if (!type.cartan.valid_index(v))
      throw std::invalid_argument("reduced_word: index out of range");
  return ReducedWord{std::move(letters)};
}

}  // namespace crystalpoly
