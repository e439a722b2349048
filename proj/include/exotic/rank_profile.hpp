#pragma once

#include <cstdint>
#include <vector>

#include "exotic/permutation.hpp"

namespace exotic {

/// The combinatorial invariants that pin down an orbit on (vector, flag)
/// pairs: for 0 <= i,j <= 2n,
///   r(i,j) = |{1..i} n w{1..j}|   (dimension of V_i n perp-flag space), and
///   m(i,j) = [alpha is contained in {1..i} u w{1..j}]   (v-membership).
struct RankProfile {
  int n2;
  std::vector<std::vector<int>> r;
  std::vector<std::vector<bool>> m;
};

inline RankProfile rank_profile(const OrbitParam& p) {
  int m2 = p.n2();
  RankProfile out{m2,
                  std::vector<std::vector<int>>(m2 + 1, std::vector<int>(m2 + 1, 0)),
                  std::vector<std::vector<bool>>(m2 + 1, std::vector<bool>(m2 + 1, false))};
  for (int i = 0; i <= m2; ++i) {
    std::uint32_t head = (i == 0) ? 0 : ((i >= 32 ? ~0u : (1u << i) - 1));
    std::uint32_t image = 0;
    for (int j = 0; j <= m2; ++j) {
      if (j > 0) image |= 1u << (p.w(j) - 1);
      out.r[i][j] = __builtin_popcount(head & image);
      out.m[i][j] = (p.alpha & ~(head | image)) == 0;
    }
  }
  return out;
}

/// Necessary condition for "orbit of a lies in the closure of orbit of b",
/// by semicontinuity:
///  - intersection dimensions only grow on the boundary: r_a >= r_b entrywise;
///  - membership v in V_i + perp-space is preserved in a limit whenever the
///    ambient sum keeps its dimension: m_b(i,j) and r_a(i,j) = r_b(i,j)
///    together force m_a(i,j).
/// This relation is validated as necessary only; it may strictly contain the
/// true closure order.
inline bool closure_necessary_leq(const OrbitParam& a, const OrbitParam& b) {
  if (a.n2() != b.n2()) throw error(errc::dimension_mismatch, "orbit parameters of different sizes");
  RankProfile pa = rank_profile(a);
  RankProfile pb = rank_profile(b);
  for (int i = 0; i <= pa.n2; ++i)
    for (int j = 0; j <= pa.n2; ++j) {
      if (pa.r[i][j] < pb.r[i][j]) return false;
      if (pb.m[i][j] && pa.r[i][j] == pb.r[i][j] && !pa.m[i][j]) return false;
    }
  return true;
}

}  // namespace exotic
