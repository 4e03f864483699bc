#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace crystalpoly {

using Int = std::int64_t;

/// Integer extended by a formal -infinity, the codomain of epsilon_i and phi_i.
///
/// max(-inf, x) = x and -inf + x = -inf. Two -inf values compare equal, so the
/// tensor-product tie rules (>= and >) behave as for ordinary integers.
class ExtInt {
 public:
  constexpr ExtInt() = default;  // -inf
  constexpr ExtInt(Int v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt neg_inf() { return ExtInt{}; }

  constexpr bool finite() const { return value_.has_value(); }
  constexpr bool is_neg_inf() const { return !value_.has_value(); }

  Int value() const {
    if (!value_) throw std::logic_error("ExtInt: value() on -inf");
    return *value_;
  }

  friend constexpr ExtInt operator+(ExtInt a, Int b) {
    return a.value_ ? ExtInt(*a.value_ + b) : a;
  }
  friend constexpr ExtInt operator-(ExtInt a, Int b) {
    return a.value_ ? ExtInt(*a.value_ - b) : a;
  }

  friend constexpr ExtInt max(ExtInt a, ExtInt b) {
    if (!a.value_) return b;
    if (!b.value_) return a;
    return *a.value_ < *b.value_ ? b : a;
  }

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a,
                                                    const ExtInt& b) {
    if (!a.value_ || !b.value_) return a.finite() <=> b.finite();
    return *a.value_ <=> *b.value_;
  }

  std::string str() const {
    return value_ ? std::to_string(*value_) : std::string("-inf");
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtInt& v) {
    return os << v.str();
  }

 private:
  std::optional<Int> value_;
};

/// max(x, 0)
constexpr Int clamp_pos(Int x) { return x > 0 ? x : 0; }

}  // namespace crystalpoly
