#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exotic/bipartition.hpp"
#include "exotic/partition.hpp"

namespace exotic {

/// lambda / result is a horizontal strip (at most one box per column) of
/// size `boxes`: enumerate every such result.
inline std::vector<Partition> horizontal_strip_results(const Partition& lambda, int boxes) {
  std::vector<Partition> out;
  std::vector<int> cur;
  int rows = static_cast<int>(lambda.length());
  auto rec = [&](auto&& self, int row, int removed) -> void {
    if (row > rows) {
      if (removed == boxes) out.push_back(Partition(cur));
      return;
    }
    // horizontal strip condition: lambda_{row+1} <= part <= lambda_row
    int lo = lambda.part(row + 1);
    int hi = lambda.part(row);
    for (int part = hi; part >= lo; --part) {
      if (removed + (hi - part) > boxes) break;
      cur.push_back(part);
      self(self, row + 1, removed + (hi - part));
      cur.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

/// Two successive horizontal strip removals of equal size leaving a duplex
/// remainder (only even-length columns).
struct StripRemoval {
  Partition lambda;
  Partition after_first;
  Partition after_second;

  std::strong_ordering operator<=>(const StripRemoval&) const = default;

  std::string to_string() const {
    return lambda.to_string() + ">" + after_first.to_string() + ">" + after_second.to_string();
  }
};

inline std::vector<StripRemoval> enumerate_strip_pairs(const Partition& lambda, int boxes) {
  std::vector<StripRemoval> out;
  for (const auto& first : horizontal_strip_results(lambda, boxes))
    for (const auto& second : horizontal_strip_results(first, boxes))
      if (second.is_duplex()) out.push_back({lambda, first, second});
  return out;
}

inline std::uint64_t strip_pair_count(const Partition& lambda, int boxes) {
  return enumerate_strip_pairs(lambda, boxes).size();
}

/// The strip pair attached to a balanced bipartition with mu+nu = lambda:
/// list the columns of lambda as the merged columns of mu and nu (nu first
/// among equal lengths); the first strip takes one box from every mu-column,
/// the second takes one box from every odd nu-column and every originally
/// even mu-column.
inline StripRemoval strip_pair_for(const Bipartition& bp) {
  Partition lambda = bp.mu.plus(bp.nu);
  Partition mu_cols = bp.mu.conjugate();
  Partition nu_cols = bp.nu.conjugate();
  Partition all_cols = lambda.conjugate();

  int total_cols = static_cast<int>(all_cols.length());
  std::vector<bool> is_mu(total_cols, false);
  // walk column lengths in decreasing order; nu-columns precede mu-columns
  // within a block of equal length
  {
    std::size_t mi = 1, ni = 1;
    for (int c = 1; c <= total_cols; ++c) {
      int len = all_cols.part(c);
      bool take_mu;
      if (nu_cols.part(ni) == len)
        take_mu = false;
      else if (mu_cols.part(mi) == len)
        take_mu = true;
      else
        throw error(errc::bad_argument, "columns of mu and nu do not merge into lambda");
      if (take_mu) {
        is_mu[c - 1] = true;
        ++mi;
      } else {
        ++ni;
      }
    }
  }

  std::vector<int> cols1(total_cols), cols2(total_cols);
  for (int c = 0; c < total_cols; ++c) {
    int len = all_cols.part(c + 1);
    bool remove1 = is_mu[c];
    bool remove2 = is_mu[c] ? (len % 2 == 0) : (len % 2 == 1);
    cols1[c] = len - (remove1 ? 1 : 0);
    cols2[c] = cols1[c] - (remove2 ? 1 : 0);
  }
  // column lists must still be weakly decreasing partitions of column lengths
  Partition after_first = Partition(std::move(cols1)).conjugate();
  Partition after_second = Partition(std::move(cols2)).conjugate();
  StripRemoval removal{lambda, after_first, after_second};
  // sanity: both removals are horizontal strips of size mu_1
  if (lambda.size() - after_first.size() != bp.mu.part(1) ||
      after_first.size() - after_second.size() != bp.mu.part(1) ||
      !after_second.is_duplex())
    throw error(errc::bad_argument, "strip construction failed for " + bp.to_string());
  return removal;
}

/// All (balanced bipartition, strip pair) matches for mu+nu = lambda and
/// mu_1 = strip size.
inline std::vector<std::pair<Bipartition, StripRemoval>> bipartition_strip_pairs(
    const Partition& lambda, int boxes) {
  std::vector<std::pair<Bipartition, StripRemoval>> out;
  for (const auto& bp : balanced_bipartitions(lambda.size() / 2)) {
    if (!(bp.mu.plus(bp.nu) == lambda) || bp.mu.part(1) != boxes) continue;
    out.emplace_back(bp, strip_pair_for(bp));
  }
  return out;
}

struct DimensionIdentityReport {
  std::uint64_t tagged_total;    // sum over balanced bipartitions of tableau counts
  std::uint64_t formula_total;   // closed induced-dimension formula
  bool totals_equal;
  bool per_shape_equal;          // strip counts match bipartition counts per (shape, size)
  std::vector<std::string> mismatches;
};

/// The two combinatorial identities behind the representation decomposition:
/// per-shape strip-pair counts match balanced-bipartition counts, and the
/// total dimensions agree with the closed formula.
inline DimensionIdentityReport dimension_identity(int n) {
  DimensionIdentityReport report{};
  TaggedPairCount totals = tagged_pair_count(n);
  report.tagged_total = totals.by_enumeration;
  report.formula_total = totals.by_formula;
  report.totals_equal = totals.equal;
  report.per_shape_equal = true;
  for (const auto& lambda : Partition::all(2 * n)) {
    for (int j = 0; j <= n; ++j) {
      std::uint64_t strips = strip_pair_count(lambda, j);
      std::uint64_t pairs = bipartition_strip_pairs(lambda, j).size();
      if (strips != pairs) {
        report.per_shape_equal = false;
        report.mismatches.push_back(lambda.to_string() + " j=" + std::to_string(j) + ": " +
                                    std::to_string(strips) + " strips vs " + std::to_string(pairs) +
                                    " bipartitions");
      }
    }
  }
  return report;
}

}  // namespace exotic
