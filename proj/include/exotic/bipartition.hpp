#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "exotic/partition.hpp"

namespace exotic {

/// A bipartition of 2n is balanced when the alternating part-sums of its two
/// components agree; balanced bipartitions label the enhanced orbits that
/// occur on the conormal variety.
inline bool is_balanced(const Bipartition& bp) {
  return bp.mu.alternating_sum() == bp.nu.alternating_sum();
}

/// Balanced bipartitions of 2n, in canonical (lexicographic) order.
inline std::vector<Bipartition> balanced_bipartitions(int n) {
  std::vector<Bipartition> out;
  for (const auto& bp : all_bipartitions(2 * n))
    if (is_balanced(bp)) out.push_back(bp);
  return out;
}

/// The exotic orbit label attached to a balanced enhanced label:
///   mu~_k = altsum(mu, 2k-1) - altsum(nu, 2k-2)
///   nu~_k = altsum(nu, 2k-1) - altsum(mu, 2k)
/// It is a bipartition of n whenever the input is balanced of size 2n.
inline Bipartition exotic_label_of(const Bipartition& bp) {
  if (!is_balanced(bp))
    throw error(errc::bad_argument, "bipartition is not balanced: " + bp.to_string());
  std::size_t len = std::max(bp.mu.length(), bp.nu.length()) + 2;
  std::vector<int> mu_t, nu_t;
  for (std::size_t k = 1; k <= len; ++k) {
    mu_t.push_back(bp.mu.alternating_prefix(2 * k - 1) - bp.nu.alternating_prefix(2 * k - 2));
    nu_t.push_back(bp.nu.alternating_prefix(2 * k - 1) - bp.mu.alternating_prefix(2 * k));
  }
  // trailing entries vanish once both inputs are exhausted
  Bipartition out{Partition(std::move(mu_t)), Partition(std::move(nu_t))};
  if (2 * out.total() != bp.total())
    throw error(errc::bad_argument, "exotic label has wrong size for " + bp.to_string());
  return out;
}

/// All balanced bipartitions of 2n mapping to the given bipartition of n:
/// the solutions (mu;nu) of mu_1 = mu~_1 and mu_{i+1} + nu_i = c_i, where
/// c = (mu~_1+nu~_1, mu~_2+nu~_1, mu~_2+nu~_2, mu~_3+nu~_2, ...).
inline std::vector<Bipartition> enhanced_fiber_of(const Bipartition& target) {
  int n = target.total();
  std::vector<int> c;
  for (int i = 1; i <= 2 * n + 2; ++i) {
    if (i % 2 == 1) {
      int k = (i + 1) / 2;
      c.push_back(target.mu.part(k) + target.nu.part(k));
    } else {
      int k = i / 2;
      c.push_back(target.mu.part(k + 1) + target.nu.part(k));
    }
  }
  std::vector<Bipartition> out;
  for (const auto& bp : all_bipartitions(2 * n)) {
    if (bp.mu.part(1) != target.mu.part(1)) continue;
    bool ok = true;
    for (std::size_t i = 1; i <= c.size() && ok; ++i)
      ok = bp.mu.part(i + 1) + bp.nu.part(i) == c[i - 1];
    // beyond the precomputed window everything is zero on both sides
    if (ok) out.push_back(bp);
  }
  return out;
}

/// Closure order on enhanced orbit labels: compare prefix sums of the
/// interleaved sequences (mu_1, nu_1, mu_2, nu_2, ...).
inline bool enhanced_closure_leq(const Bipartition& a, const Bipartition& b) {
  if (a.total() != b.total())
    throw error(errc::dimension_mismatch, "comparing bipartitions of different sizes");
  std::size_t len = std::max({a.mu.length(), a.nu.length(), b.mu.length(), b.nu.length()}) + 1;
  int sa = 0, sb = 0;
  for (std::size_t k = 1; k <= len; ++k) {
    sa += a.mu.part(k);
    sb += b.mu.part(k);
    if (sa > sb) return false;
    sa += a.nu.part(k);
    sb += b.nu.part(k);
    if (sa > sb) return false;
  }
  return true;
}

/// Number of orbit parameters (equivalently tagged pairs) for a given n:
/// sum_{j=0}^{n} (2n)! / (2^{n-j} (n-j)! (j!)^2).
inline std::uint64_t orbit_count_formula(int n) {
  auto factorial = [](int k) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
  };
  std::uint64_t total = 0;
  for (int j = 0; j <= n; ++j) {
    std::uint64_t denom = (1ULL << (n - j)) * factorial(n - j) * factorial(j) * factorial(j);
    total += factorial(2 * n) / denom;
  }
  return total;
}

struct TaggedPairCount {
  std::uint64_t by_enumeration;  // sum of tableau counts over balanced bipartitions
  std::uint64_t by_formula;
  bool equal;
};

inline TaggedPairCount tagged_pair_count(int n) {
  std::uint64_t total = 0;
  for (const auto& bp : balanced_bipartitions(n)) total += bp.mu.plus(bp.nu).tableau_count();
  std::uint64_t formula = orbit_count_formula(n);
  return {total, formula, total == formula};
}

// ---- dimension formulas ----

/// Dimension of the exotic orbit labelled by a bipartition of n:
/// 2n^2 - 2 nu_1 - 4 mu_2 - 6 nu_2 - 8 mu_3 - 10 nu_3 - ...
inline int exotic_orbit_dim(int n, const Bipartition& label) {
  int dim = 2 * n * n;
  std::size_t len = std::max(label.mu.length(), label.nu.length());
  for (std::size_t k = 1; k <= len; ++k) {
    if (k >= 2) dim -= 4 * static_cast<int>(k - 1) * label.mu.part(k);
    dim -= (4 * static_cast<int>(k) - 2) * label.nu.part(k);
  }
  return dim;
}

/// Dimension of the stratum of pairs (v,u,x) with enhanced label (mu;nu):
/// 2n^2 + |nu| - 2 nu_2 - 2 mu_3 - 2 nu_3 - 2 mu_4 - 4 nu_4 - 4 mu_5 - ...
inline int pair_stratum_dim(int n, const Bipartition& bp) {
  int dim = 2 * n * n + bp.nu.size();
  std::size_t len = std::max(bp.mu.length(), bp.nu.length());
  for (std::size_t j = 2; j <= len; ++j) {
    dim -= 2 * static_cast<int>(j / 2) * bp.nu.part(j);
    if (j >= 3) dim -= 2 * static_cast<int>((j - 1) / 2) * bp.mu.part(j);
  }
  return dim;
}

/// Dimension of the Springer-fibre stratum picked out by any tableau of the
/// given shape: shape_2 + 2 shape_3 + 3 shape_4 + ...
inline int springer_stratum_dim(const Partition& shape) {
  int dim = 0;
  for (std::size_t k = 2; k <= shape.length(); ++k)
    dim += static_cast<int>(k - 1) * shape.part(k);
  return dim;
}

/// Dimension of the conormal stratum labelled by (mu;nu) and any tableau:
/// 2n^2 + |nu| + (mu_2 - nu_2) + (mu_4 - nu_4) + ...; equals 2n^2 + n.
inline int conormal_stratum_dim(int n, const Bipartition& bp) {
  int dim = 2 * n * n + bp.nu.size();
  std::size_t len = std::max(bp.mu.length(), bp.nu.length());
  for (std::size_t k = 2; k <= len; k += 2) dim += bp.mu.part(k) - bp.nu.part(k);
  return dim;
}

}  // namespace exotic
