#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exotic/bipartition.hpp"
#include "exotic/permutation.hpp"

namespace exotic {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Hard-coded reference poset of the 21 orbit parameters for n = 2, as a
/// Hasse diagram; edges run (lower cover, upper cover).
struct HasseFixture {
  std::vector<OrbitParam> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes

  std::string canonical_text() const {
    std::string s;
    for (const auto& node : nodes) s += print_param(node) + "\n";
    for (auto [lo, hi] : edges) s += print_param(nodes[lo]) + " < " + print_param(nodes[hi]) + "\n";
    return s;
  }
  std::uint64_t checksum() const { return fnv1a(canonical_text()); }
};

inline HasseFixture hasse_fixture_n2() {
  // top-down, as printed
  static const char* node_text[21] = {
      "[3][4][1][2]",  // 0
      "[2][1][4][3]",  // 1
      "[3]4[1][2]",    // 2
      "[3][4][1]2",    // 3
      "[1][2][3][4]",  // 4
      "[2][1]4[3]",    // 5
      "[2][1][4]3",    // 6
      "[3]4[1]2",      // 7
      "34[1][2]",      // 8
      "[3][4]12",      // 9
      "[1][2][3]4",    // 10
      "[2][1]43",      // 11
      "34[1]2",        // 12
      "[3]412",        // 13
      "[1][2]34",      // 14
      "2[1]43",        // 15
      "[2]143",        // 16
      "3412",          // 17
      "[1]234",        // 18
      "2143",          // 19
      "1234",          // 20
  };
  // children of each node (its lower covers)
  static const std::vector<std::vector<int>> below = {
      {1, 2, 3},        // 0
      {4, 5, 6},        // 1
      {5, 7, 8},        // 2
      {6, 7, 9},        // 3
      {10},             // 4
      {10, 11},         // 5
      {10, 11},         // 6
      {10, 11, 12, 13}, // 7
      {11, 12},         // 8
      {11, 13},         // 9
      {14},             // 10
      {14, 15, 16},     // 11
      {15, 17},         // 12
      {16, 17},         // 13
      {18},             // 14
      {18, 19},         // 15
      {18, 19},         // 16
      {19},             // 17
      {20},             // 18
      {20},             // 19
      {},               // 20
  };
  HasseFixture fx;
  for (const char* t : node_text) fx.nodes.push_back(parse_param(t));
  for (int hi = 0; hi < 21; ++hi)
    for (int lo : below[hi]) fx.edges.emplace_back(lo, hi);
  return fx;
}

/// Hard-coded reference correspondence for n = 2: orbit parameter ->
/// (bipartition, descent set). A tableau of any shape of size 4 is
/// determined by its descent set.
struct CorrespondenceRow {
  OrbitParam param;
  Bipartition label;
  std::set<int> descents;
};

inline std::vector<CorrespondenceRow> correspondence_fixture_n2() {
  struct Raw {
    const char* param;
    std::vector<int> mu, nu;
    std::set<int> des;
  };
  static const std::vector<Raw> raw = {
      {"1234", {}, {2, 2}, {2}},
      {"[1]234", {1}, {2, 1}, {2}},
      {"[1][2]34", {2}, {2}, {}},
      {"[1][2][3]4", {2, 1}, {1}, {2}},
      {"[1][2][3][4]", {2, 2}, {}, {2}},
      {"2143", {}, {2, 2}, {1, 3}},
      {"2[1]43", {1}, {2, 1}, {3}},
      {"[2]143", {1}, {2, 1}, {1}},
      {"[2][1]43", {1, 1}, {1, 1}, {1, 3}},
      {"[2][1]4[3]", {2, 1}, {1}, {1}},
      {"[2][1][4]3", {2, 1}, {1}, {3}},
      {"[2][1][4][3]", {2, 2}, {}, {1, 3}},
      {"3412", {}, {1, 1, 1, 1}, {1, 2, 3}},
      {"34[1]2", {1}, {1, 1, 1}, {2, 3}},
      {"[3]412", {1, 1, 1}, {1}, {1, 2}},
      {"[3]4[1]2", {1, 1}, {1, 1}, {2}},
      {"34[1][2]", {1}, {1, 1, 1}, {1, 3}},
      {"[3][4]12", {1, 1, 1}, {1}, {1, 3}},
      {"[3]4[1][2]", {1}, {1, 1, 1}, {1, 2}},
      {"[3][4][1]2", {1, 1, 1}, {1}, {2, 3}},
      {"[3][4][1][2]", {1, 1, 1, 1}, {}, {1, 2, 3}},
  };
  std::vector<CorrespondenceRow> rows;
  for (const auto& r : raw)
    rows.push_back({parse_param(r.param), {Partition(r.mu), Partition(r.nu)}, r.des});
  return rows;
}

inline std::string correspondence_fixture_text() {
  std::string s;
  for (const auto& row : correspondence_fixture_n2()) {
    s += print_param(row.param) + " -> " + row.label.to_string() + " des{";
    for (int d : row.descents) s += std::to_string(d);
    s += "}\n";
  }
  return s;
}

}  // namespace exotic
