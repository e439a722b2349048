#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "exotic/prime_field.hpp"

namespace exotic {

/// Integer partition: weakly decreasing positive parts; indexing past the
/// end reads as zero.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

  /// 1-based part access; zero beyond the last part.
  int part(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool is_empty() const { return parts_.empty(); }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  Partition conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
  }

  /// Componentwise sum of rows.
  Partition plus(const Partition& o) const {
    std::vector<int> out(std::max(parts_.size(), o.parts_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = part(i + 1) + o.part(i + 1);
    return Partition(std::move(out));
  }

  /// Multiset union of parts (sorted merge).
  Partition union_with(const Partition& o) const {
    std::vector<int> out;
    out.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
               std::back_inserter(out), std::greater<int>());
    return Partition(std::move(out));
  }

  Partition duplex() const { return union_with(*this); }

  /// Every part occurs an even number of times?
  bool is_duplex() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); i += 2)
      if (parts_[i] != parts_[i + 1]) return false;
    return parts_.size() % 2 == 0;
  }

  /// For a duplex partition (a,a,b,b,...), the half (a,b,...).
  Partition duplex_half() const {
    if (!is_duplex()) throw error(errc::not_duplex_pattern, "partition is not duplex: " + to_string());
    std::vector<int> out;
    for (std::size_t i = 0; i < parts_.size(); i += 2) out.push_back(parts_[i]);
    return Partition(std::move(out));
  }

  /// p_1 - p_2 + p_3 - ...
  int alternating_sum() const {
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i % 2 == 0) ? parts_[i] : -parts_[i];
    return s;
  }

  /// Alternating sum of the first k parts (zero-padded).
  int alternating_prefix(std::size_t k) const {
    int s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += (i % 2 == 1) ? part(i) : -part(i);
    return s;
  }

  /// Diagram containment.
  bool contains(const Partition& o) const {
    for (std::size_t i = 1; i <= o.length(); ++i)
      if (part(i) < o.part(i)) return false;
    return true;
  }

  /// Number of standard Young tableaux of this shape (hook length formula).
  /// Exact for |shape| <= 20.
  std::uint64_t tableau_count() const {
    Partition conj = conjugate();
    unsigned __int128 factorial = 1;
    for (int k = 2; k <= size(); ++k) factorial *= k;
    unsigned __int128 hooks = 1;
    for (std::size_t i = 1; i <= length(); ++i)
      for (int j = 1; j <= part(i); ++j)
        hooks *= static_cast<unsigned>(part(i) - j + conj.part(j) - static_cast<int>(i) + 1);
    return static_cast<std::uint64_t>(factorial / hooks);
  }

  /// Part-by-part comparison with implicit zero padding.
  std::strong_ordering operator<=>(const Partition& o) const {
    std::size_t n = std::max(parts_.size(), o.parts_.size());
    for (std::size_t i = 1; i <= n; ++i) {
      if (part(i) != o.part(i)) return part(i) <=> o.part(i);
    }
    return std::strong_ordering::equal;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  /// Compact form: "221" for (2,2,1), "-" for the empty partition.
  /// Parts above 9 are bracketed, e.g. "[12]3".
  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (int p : parts_) {
      if (p > 9)
        s += "[" + std::to_string(p) + "]";
      else
        s += std::to_string(p);
    }
    return s;
  }

  /// All partitions of n, ascending in the part-by-part order.
  static std::vector<Partition> all(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static void enumerate(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      enumerate(remaining - p, p, cur, out);
      cur.pop_back();
    }
  }

  void normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
        throw error(errc::bad_argument, "parts must be weakly decreasing and positive");
    }
  }

  std::vector<int> parts_;
};

/// Ordered pair of partitions labelling enhanced/exotic orbits.
struct Bipartition {
  Partition mu;
  Partition nu;

  int total() const { return mu.size() + nu.size(); }

  std::strong_ordering operator<=>(const Bipartition&) const = default;

  std::string to_string() const { return "(" + mu.to_string() + ";" + nu.to_string() + ")"; }
};

/// All bipartitions (mu;nu) with |mu|+|nu| = total, lexicographic in (mu,nu).
inline std::vector<Bipartition> all_bipartitions(int total) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= total; ++k)
    for (const auto& mu : Partition::all(k))
      for (const auto& nu : Partition::all(total - k)) out.push_back({mu, nu});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace exotic
