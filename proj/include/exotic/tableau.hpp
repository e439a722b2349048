#pragma once

#include <set>
#include <string>
#include <vector>

#include "exotic/partition.hpp"

namespace exotic {

/// Standard Young tableau, stored as its growth chain: partitions
/// {} = c_0 < c_1 < ... < c_m, each step adding exactly one box.
class StandardTableau {
 public:
  static StandardTableau from_chain(std::vector<Partition> chain) {
    if (chain.empty() || !chain.front().is_empty())
      throw error(errc::bad_argument, "tableau chain must start at the empty partition");
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if (chain[i].size() != static_cast<int>(i) || !chain[i].contains(chain[i - 1]))
        throw error(errc::bad_argument, "tableau chain must add one box per step");
    }
    return StandardTableau(std::move(chain));
  }

  /// Tableau from the row index (1-based) of the box added at each step.
  static StandardTableau from_row_word(const std::vector<int>& word) {
    std::vector<Partition> chain{Partition{}};
    for (int r : word) {
      std::vector<int> parts = chain.back().parts();
      if (r < 1 || r > static_cast<int>(parts.size()) + 1)
        throw error(errc::bad_argument, "row word step out of range");
      if (r == static_cast<int>(parts.size()) + 1)
        parts.push_back(1);
      else
        ++parts[r - 1];
      chain.push_back(Partition(std::move(parts)));
    }
    return from_chain(std::move(chain));
  }

  const std::vector<Partition>& chain() const { return chain_; }
  const Partition& shape() const { return chain_.back(); }
  std::size_t entries() const { return chain_.size() - 1; }

  /// Row (1-based) in which entry i was added.
  int row_of(std::size_t i) const {
    const Partition& before = chain_[i - 1];
    const Partition& after = chain_[i];
    for (std::size_t r = 1; r <= after.length(); ++r)
      if (after.part(r) != before.part(r)) return static_cast<int>(r);
    throw error(errc::bad_argument, "corrupt tableau chain");
  }

  std::vector<int> row_word() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < chain_.size(); ++i) out.push_back(row_of(i));
    return out;
  }

  /// Descents: i such that i+1 sits in a strictly lower row than i.
  std::set<int> descent_set() const {
    std::set<int> out;
    for (std::size_t i = 1; i + 1 < chain_.size(); ++i)
      if (row_of(i + 1) > row_of(i)) out.insert(static_cast<int>(i));
    return out;
  }

  /// Entries arranged by row, e.g. {{1,3},{2,4}}.
  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(shape().length());
    for (std::size_t i = 1; i < chain_.size(); ++i)
      out[row_of(i) - 1].push_back(static_cast<int>(i));
    return out;
  }

  std::strong_ordering operator<=>(const StandardTableau& o) const {
    return row_word() <=> o.row_word();
  }
  bool operator==(const StandardTableau& o) const { return chain_ == o.chain_; }

  std::string to_string() const {
    std::string s;
    for (const auto& row : rows()) {
      if (!s.empty()) s += "/";
      for (int e : row) s += std::to_string(e);
    }
    return s;
  }

 private:
  explicit StandardTableau(std::vector<Partition> chain) : chain_(std::move(chain)) {}

  std::vector<Partition> chain_;
};

/// All standard Young tableaux of the given shape, ordered by row word.
inline std::vector<StandardTableau> enumerate_tableaux(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<Partition> chain{Partition{}};
  auto grow = [&](auto&& self) -> void {
    Partition cur = chain.back();  // copy: the chain reallocates below
    if (cur == shape) {
      out.push_back(StandardTableau::from_chain(chain));
      return;
    }
    for (std::size_t r = 1; r <= shape.length(); ++r) {
      // can we add a box in row r and stay inside the shape?
      if (cur.part(r) >= shape.part(r)) continue;
      if (r > 1 && cur.part(r) + 1 > cur.part(r - 1)) continue;
      std::vector<int> parts = cur.parts();
      if (r > parts.size())
        parts.push_back(1);
      else
        ++parts[r - 1];
      chain.push_back(Partition(std::move(parts)));
      self(self);
      chain.pop_back();
    }
  };
  grow(grow);
  return out;
}

}  // namespace exotic
