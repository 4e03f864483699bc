#pragma once

// Cartan data, weights in pairing coordinates and periodic index sequences.
// All indices (simple roots and sequence positions) are 1-based.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crystalpoly/types.hpp"

namespace crystalpoly {

/// Generalized Cartan matrix a[i][j] = <h_i, alpha_j>.
class CartanData {
 public:
  CartanData() = default;

  /// Validates: square, a_ii = 2, a_ij <= 0 (i != j), a_ij = 0 <=> a_ji = 0.
  /// Symmetrizability is not required.
  explicit CartanData(std::vector<std::vector<Int>> matrix,
                      std::vector<std::string> labels = {})
      : matrix_(std::move(matrix)), labels_(std::move(labels)) {
    const auto n = matrix_.size();
    if (n == 0) throw std::invalid_argument("cartan: empty matrix");
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_[i].size() != n)
        throw std::invalid_argument("cartan: matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_[i][i] != 2)
        throw std::invalid_argument("cartan: diagonal entry " +
                                    std::to_string(i + 1) + " is not 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (matrix_[i][j] > 0)
          throw std::invalid_argument("cartan: positive off-diagonal entry");
        if ((matrix_[i][j] == 0) != (matrix_[j][i] == 0))
          throw std::invalid_argument("cartan: asymmetric zero pattern");
      }
    }
    if (!labels_.empty() && labels_.size() != n)
      throw std::invalid_argument("cartan: label count does not match rank");
  }

  int rank() const { return static_cast<int>(matrix_.size()); }

  /// <h_i, alpha_j>, 1-based.
  Int a(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i - 1)]
                  [static_cast<std::size_t>(j - 1)];
  }

  bool valid_index(int i) const { return i >= 1 && i <= rank(); }

  const std::vector<std::vector<Int>>& matrix() const { return matrix_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(int i) const {
    return labels_.empty() ? std::to_string(i)
                           : labels_[static_cast<std::size_t>(i - 1)];
  }

  friend bool operator==(const CartanData& a, const CartanData& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::vector<Int>> matrix_;
  std::vector<std::string> labels_;
};

inline CartanData new_cartan(std::vector<std::vector<Int>> matrix) {
  return CartanData(std::move(matrix));
}

/// Weight stored as pairings (<h_1, lambda>, ..., <h_n, lambda>).
struct Weight {
  std::vector<Int> coeffs;

  static Weight zero(int rank) {
    return Weight{std::vector<Int>(static_cast<std::size_t>(rank), 0)};
  }

  int rank() const { return static_cast<int>(coeffs.size()); }
  Int pairing(int i) const { return coeffs[static_cast<std::size_t>(i - 1)]; }
  Int& pairing(int i) { return coeffs[static_cast<std::size_t>(i - 1)]; }

  bool dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](Int c) { return c >= 0; });
  }

  /// this += m * alpha_i
  void add_root(const CartanData& cartan, int i, Int m) {
    for (int j = 1; j <= rank(); ++j) pairing(j) += m * cartan.a(j, i);
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// The infinite index sequence iota = ... i_2 i_1, stored as the period
/// (i_1, ..., i_m) repeated forever.
class Sequence {
 public:
  Sequence() = default;

  Sequence(std::vector<int> period, int rank) : period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("sequence: empty period");
    for (int v : period_) {
      if (v < 1 || v > rank)
        throw std::invalid_argument("sequence: index " + std::to_string(v) +
                                    " out of range 1.." +
                                    std::to_string(rank));
    }
    for (int i = 1; i <= rank; ++i) {
      if (std::find(period_.begin(), period_.end(), i) == period_.end())
        throw std::invalid_argument("sequence: index " + std::to_string(i) +
                                    " never occurs in the period");
    }
  }

  /// Parses "1 2 3" or "1,2,3"; the leftmost token is i_1.
  static Sequence parse(std::string_view text, int rank) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<int> period;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw std::invalid_argument("sequence: bad token '" + tok + "'");
      period.push_back(v);
    }
    return Sequence(std::move(period), rank);
  }

  const std::vector<int>& period() const { return period_; }
  int period_length() const { return static_cast<int>(period_.size()); }

  /// i_k for k >= 1.
  int at(int k) const {
    return period_[static_cast<std::size_t>((k - 1) % period_length())];
  }

  std::string str() const {
    std::string out;
    for (std::size_t n = 0; n < period_.size(); ++n) {
      if (n) out += ' ';
      out += std::to_string(period_[n]);
    }
    return out;
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<int> period_;
};

/// Smallest l > k with i_l = i_k.
inline int k_plus(const Sequence& seq, int k) {
  const int idx = seq.at(k);
  int l = k + 1;
  while (seq.at(l) != idx) ++l;
  return l;
}

/// Largest l < k with i_l = i_k, or 0.
inline int k_minus(const Sequence& seq, int k) {
  const int idx = seq.at(k);
  for (int l = k - 1; l >= 1; --l) {
    if (seq.at(l) == idx) return l;
  }
  return 0;
}

/// First position k with i_k = i.
inline int iota_first(const Sequence& seq, int i) {
  for (int k = 1; k <= seq.period_length(); ++k) {
    if (seq.at(k) == i) return k;
  }
  throw std::invalid_argument("iota_first: index does not occur");
}

}  // namespace crystalpoly
