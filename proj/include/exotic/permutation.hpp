#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "exotic/prime_field.hpp"

namespace exotic {

/// Permutation of {1..m} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[v - 1])
        throw error(errc::bad_argument, "not a permutation");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
  }

  /// The order-reversing permutation i -> m+1-i.
  static Permutation longest(int m) {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = m - i;
    return Permutation(std::move(w));
  }

  int degree() const { return static_cast<int>(w_.size()); }

  /// 1-based application.
  int operator()(int i) const { return w_[i - 1]; }

  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 1; i <= degree(); ++i) inv[w_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
  }

  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw error(errc::dimension_mismatch, "permutation degrees differ");
    std::vector<int> c(w_.size());
    for (int i = 1; i <= degree(); ++i) c[i - 1] = (*this)(o(i));
    return Permutation(std::move(c));
  }

  bool is_fixed_point_free_involution() const {
    for (int i = 1; i <= degree(); ++i) {
      int j = (*this)(i);
      if (j == i || (*this)(j) != i) return false;
    }
    return true;
  }

  std::strong_ordering operator<=>(const Permutation&) const = default;

  std::string to_string() const {
    std::string s;
    for (int v : w_) s += std::to_string(v);
    return s;
  }

 private:
  std::vector<int> w_;
};

/// Permutations w of {1..2n} with w(2n+1-i) = 2n+1-w^{-1}(i) != i for all i;
/// equivalently w*longest is a fixed-point-free involution. These label the
/// symplectic-group orbits on the flag variety.
inline bool is_orbit_permutation(const Permutation& w) {
  int m = w.degree();
  if (m % 2 != 0) return false;
  Permutation winv = w.inverse();
  for (int i = 1; i <= m; ++i) {
    int lhs = w(m + 1 - i);
    if (lhs != m + 1 - winv(i) || lhs == i) return false;
  }
  return true;
}

/// All fixed-point-free involutions of {1..m}, m even.
inline std::vector<Permutation> fixed_point_free_involutions(int m) {
  std::vector<Permutation> out;
  std::vector<int> partner(m + 1, 0);
  auto rec = [&](auto&& self) -> void {
    int i = 1;
    while (i <= m && partner[i] != 0) ++i;
    if (i > m) {
      std::vector<int> w(m);
      for (int k = 1; k <= m; ++k) w[k - 1] = partner[k];
      out.emplace_back(std::move(w));
      return;
    }
    for (int j = i + 1; j <= m; ++j) {
      if (partner[j] != 0) continue;
      partner[i] = j;
      partner[j] = i;
      self(self);
      partner[i] = 0;
      partner[j] = 0;
    }
  };
  rec(rec);
  return out;
}

/// The orbit permutations for a given n, ascending in one-line order.
inline std::vector<Permutation> orbit_permutations(int n) {
  int m = 2 * n;
  std::vector<Permutation> out;
  Permutation w0 = Permutation::longest(m);
  for (const auto& sigma : fixed_point_free_involutions(m)) out.push_back(sigma * w0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Label of a symplectic orbit on (vector, flag) pairs: an orbit permutation
/// together with a w-closed subset alpha of {1..2n}, stored as a bitmask
/// (bit v-1 represents the value v).
struct OrbitParam {
  Permutation w;
  std::uint32_t alpha;

  int n2() const { return w.degree(); }

  bool has(int value) const { return (alpha >> (value - 1)) & 1u; }

  std::vector<int> alpha_values() const {
    std::vector<int> out;
    for (int v = 1; v <= n2(); ++v)
      if (has(v)) out.push_back(v);
    return out;
  }

  std::strong_ordering operator<=>(const OrbitParam&) const = default;
};

/// alpha is w-closed when i<j, w^{-1}(i)<w^{-1}(j), j in alpha imply i in alpha.
inline bool is_w_closed(const Permutation& w, std::uint32_t alpha) {
  Permutation winv = w.inverse();
  int m = w.degree();
  for (int j = 1; j <= m; ++j) {
    if (!((alpha >> (j - 1)) & 1u)) continue;
    for (int i = 1; i < j; ++i)
      if (winv(i) < winv(j) && !((alpha >> (i - 1)) & 1u)) return false;
  }
  return true;
}

inline bool is_valid_orbit_param(const OrbitParam& p) {
  return is_orbit_permutation(p.w) && is_w_closed(p.w, p.alpha) &&
         (p.alpha >> p.n2()) == 0;
}

/// All w-closed subsets for a fixed w, ascending as bitmasks. Each value j
/// forces the set req[j] of values that must accompany it.
inline std::vector<std::uint32_t> w_closed_subsets(const Permutation& w) {
  int m = w.degree();
  Permutation winv = w.inverse();
  std::vector<std::uint32_t> req(m + 1, 0);
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i < j; ++i)
      if (winv(i) < winv(j)) req[j] |= 1u << (i - 1);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int j = 1; j <= m && ok; ++j)
      if ((mask >> (j - 1)) & 1u) ok = (req[j] & ~mask) == 0;
    if (ok) out.push_back(mask);
  }
  return out;
}

/// All orbit parameters for a given n, ordered lexicographically by one-line
/// notation and then by alpha bitmask.
inline std::vector<OrbitParam> enumerate_orbit_params(int n) {
  std::vector<OrbitParam> out;
  for (const auto& w : orbit_permutations(n))
    for (std::uint32_t alpha : w_closed_subsets(w)) out.push_back({w, alpha});
  return out;
}

// ---- ASCII grammar ----
//
// One-line values with alpha members wrapped in square brackets:
// "[2][1]4[3]" is (2143, {1,2,3}). Values are single digits when 2n <= 9,
// comma-separated otherwise. The parser also accepts several digits inside
// one bracket pair ("[21]4[3]") in digit mode.

inline std::string print_param(const OrbitParam& p) {
  bool commas = p.n2() > 9;
  std::string s;
  for (int i = 1; i <= p.n2(); ++i) {
    if (commas && i > 1) s += ",";
    int v = p.w(i);
    if (p.has(v))
      s += "[" + std::to_string(v) + "]";
    else
      s += std::to_string(v);
  }
  return s;
}

inline OrbitParam parse_param(const std::string& text) {
  std::vector<int> values;
  std::vector<bool> barred;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw error(errc::bad_argument, "bad orbit parameter \"" + text + "\": " + why);
  };
  bool commas = text.find(',') != std::string::npos;
  while (i < text.size()) {
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == '[') {
      std::size_t close = text.find(']', i);
      if (close == std::string::npos) fail("unterminated bracket");
      std::string inside = text.substr(i + 1, close - i - 1);
      if (inside.empty()) fail("empty bracket");
      if (commas) {
        values.push_back(std::stoi(inside));
        barred.push_back(true);
      } else {
        for (char c : inside) {
          if (c < '1' || c > '9') fail("expected a digit");
          values.push_back(c - '0');
          barred.push_back(true);
        }
      }
      i = close + 1;
    } else if (text[i] >= '1' && text[i] <= '9') {
      if (commas) {
        std::size_t next = text.find(',', i);
        std::string token = text.substr(i, next == std::string::npos ? std::string::npos : next - i);
        values.push_back(std::stoi(token));
        barred.push_back(false);
        i += token.size();
      } else {
        values.push_back(text[i] - '0');
        barred.push_back(false);
        ++i;
      }
    } else {
      fail("unexpected character");
    }
  }
  if (values.empty()) fail("no values");
  std::uint32_t alpha = 0;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (barred[k]) alpha |= 1u << (values[k] - 1);
  OrbitParam p{Permutation(std::move(values)), alpha};
  if (!is_valid_orbit_param(p)) fail("not a valid orbit parameter");
  return p;
}

}  // namespace exotic
