#pragma once

#include "exotic/matrix.hpp"
#include "exotic/partition.hpp"

namespace exotic {

/// Jordan type of a nilpotent operator: the partition whose conjugate parts
/// are rank(x^{k-1}) - rank(x^k). Throws unless x^dim = 0.
inline Partition jordan_type(const Matrix& x) {
  if (!x.is_square()) throw error(errc::dimension_mismatch, "jordan type of a non-square matrix");
  std::size_t d = x.rows();
  if (d == 0) return {};
  auto pw = x.powers(d);
  if (!pw[d].is_zero()) throw error(errc::not_nilpotent, "operator is not nilpotent");
  std::vector<int> conj;
  std::size_t prev = d;  // rank(x^0)
  for (std::size_t k = 1; k <= d; ++k) {
    std::size_t r = pw[k].rank();
    if (prev == r) break;
    conj.push_back(static_cast<int>(prev - r));
    prev = r;
  }
  return Partition(std::move(conj)).conjugate();
}

}  // namespace exotic
